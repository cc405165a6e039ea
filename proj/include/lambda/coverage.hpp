#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lambda {

enum class CertificateKind : std::uint8_t { CurtisResidue, OddPrimary };
enum class Statement : std::uint8_t { None, A, B };

std::string_view to_string(CertificateKind kind);
std::string_view to_string(Statement s);

/// Why pi_n(S^2) is nonzero: either n is not 1 mod 8 (2-primary nonvanishing),
/// or Z/p sits in pi_n(S^3) = pi_n(S^2) with n = 2(p-1)k + 1.
struct Certificate {
    std::int64_t n = 2;
    CertificateKind kind = CertificateKind::CurtisResidue;
    std::uint32_t p = 0;  // OddPrimary only
    std::int64_t k = 0;   // OddPrimary only
    Statement statement = Statement::None;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Z/p in pi_{2(p-1)k+1}(S^3) for k not 1 mod p.
bool statement_A_applies(std::uint32_t p, std::int64_t k);
/// Z/p in pi_{2(p-1)k+1}(S^3) for k not 0 mod p.
bool statement_B_applies(std::uint32_t p, std::int64_t k);

/// Default certificate: the residue class when n is not 1 mod 8, else p = 3
/// with k = (n-1)/4. Throws DomainError for n < 2.
Certificate certify_dimension(std::int64_t n);

/// Every certificate for n: the residue one if it applies, then each odd
/// prime p <= max_prime with 2(p-1) | n-1.
std::vector<Certificate> all_certificates(std::int64_t n, std::uint32_t max_prime);

/// Checks the invariants; returns an explanation on failure.
std::optional<std::string> validate(const Certificate& c);

/// Parameters of a composition alpha_i^{(f)} o alpha_j^{(g)}.
struct MoriParams {
    std::uint32_t p = 3;
    std::int64_t f = 0;
    std::int64_t g = 0;
    std::int64_t i = 1;
    std::int64_t j = 1;

    /// e_C(alpha_i^{(f)}) e_C(alpha_j^{(g)}) = p^{-u} with u = f + g + 2.
    std::int64_t u() const { return f + g + 2; }
};

/// e_C(alpha^{(f)}) = -p^{-f-1}, returned as (sign, exponent of p).
struct EInvariant {
    int sign = -1;
    std::int64_t p_exponent = -1;
};
EInvariant e_invariant(std::int64_t f);

/// Integer window [lower, upper) of n allowed by the second inequality chain,
/// plus whether the first chain on u holds.
struct MoriWindow {
    bool u_condition = false;
    std::int64_t lower = 0;  // inclusive
    std::int64_t upper = 0;  // exclusive
};

/// Throws DomainError if f, g < 0 or i, j < 1, or on int64 overflow.
MoriWindow mori_window(const MoriParams& params);

/// Both inequality chains hold for this n.
bool mori_check(const MoriParams& params, std::int64_t n);

struct FinalRemarkInstance {
    MoriParams params;
    MoriWindow window;
    std::int64_t n_min = 0;  // window clipped to n >= 1
    std::int64_t n_max = -1;
    bool verdict = false;    // some n >= 1 satisfies mori_check
    std::int64_t target_dimension = 0;  // 2(p-1)(p^p k + 1) + 1
};

/// g = 0, f = p-2, i = p^2 k - 1, j = p^{p-2}.
FinalRemarkInstance final_remark_instance(std::uint32_t p, std::int64_t k);

}  // namespace lambda

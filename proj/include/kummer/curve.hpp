#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kummer/error.hpp"

namespace kummer {

struct RootFactor {
    std::string label;      // opaque name of the root, distinctness is all that matters
    long long multiplicity; // 0 < multiplicity < m
};

// Combinatorial model of the Kummer extension y^m = prod (x - alpha_i)^{lambda_i}.
// The branch indices are u = 0 (an auxiliary unramified point), u = 1..r (the
// roots, in input order) and u = r+1 (infinity, with multiplicity -sum lambda_i).
//
// Validation happens once in the constructor; instances are immutable
// afterwards and safe to share across threads.
class CurveSpec {
  public:
    CurveSpec(long long m, long long characteristic, std::vector<RootFactor> roots);

    long long m() const { return m_; }
    long long characteristic() const { return p_; }
    long long num_roots() const { return static_cast<long long>(roots_.size()); }
    long long infinity_index() const { return num_roots() + 1; }
    const std::vector<RootFactor>& roots() const { return roots_; }

    /// Multiplicity lambda_u for any branch index u in {0,...,r+1}.
    /// lambda_0 = 0; lambda_{r+1} = -sum of the root multiplicities.
    long long multiplicity(long long u) const;

    bool operator==(const CurveSpec& other) const;

  private:
    long long m_;
    long long p_;
    std::vector<RootFactor> roots_;
    long long sum_mult_;
};

struct BranchPlace {
    long long u;
    long long d;  // gcd(m, lambda_u): number of places of F above P_u
    long long e;  // m / d: ramification index
    bool totally_ramified;
};

/// Ramification data at branch index u; throws errc::bad_index out of range.
BranchPlace ramification(const CurveSpec& spec, long long u);

/// Genus by Riemann-Hurwitz with tame different:
/// 2g - 2 = -2m + sum_{u=1}^{r+1} d_u (e_u - 1).
long long genus(const CurveSpec& spec);

/// Parses `[char=INT;] y^INT = rhs` where rhs is a product of factors
/// `x`, `x^INT`, `(x)`, `(x-LABEL)^INT`, `(x+LABEL)` joined by `*` (the `*`
/// may be omitted), or the binomial `x^INT - LABEL` / `x^INT + LABEL`.
/// Binomials expand to their root multiset; in characteristic p > 0 the
/// p-part of the exponent becomes a shared multiplicity.
CurveSpec parse_curve(std::string_view text);

/// Pretty-printer inverse to parse_curve: parse_curve(render(spec)) == spec.
std::string render(const CurveSpec& spec);

}  // namespace kummer

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "coeffective/matrix.hpp"
#include "coeffective/rational.hpp"

namespace coeffective {

/// Basis monomial e^{i1} ^ ... ^ e^{ik} with strictly increasing indices in
/// [1..dim], stored as a bitmask. Same-degree blades are ordered
/// lexicographically on their index lists; that order is the canonical basis
/// order everywhere in this library.
struct Blade {
    int dim = 0;
    std::uint64_t bits = 0;

    Blade() = default;
    Blade(int dim, std::initializer_list<int> indices);
    Blade(int dim, const std::vector<int>& indices);
    static Blade from_bits(int dim, std::uint64_t bits) {
        Blade b;
        b.dim = dim;
        b.bits = bits;
        return b;
    }

    int degree() const;
    std::vector<int> indices() const;
    bool contains(int index) const { return bits >> (index - 1) & 1u; }

    bool operator==(const Blade& o) const { return dim == o.dim && bits == o.bits; }
    bool operator<(const Blade& o) const;  // by degree, then lex on index lists
};

/// Element of the exterior algebra over Q^dim: blade -> coefficient, no zero
/// coefficients stored. May be inhomogeneous; operations state their degree
/// contracts.
struct Form {
    int dim = 0;
    std::map<Blade, Rational> terms;

    Form() = default;
    explicit Form(int dim) : dim(dim) {}

    static Form zero(int dim) { return Form(dim); }
    static Form unit(int dim);  // the scalar 1 (empty blade)
    static Form basis_form(int dim, std::initializer_list<int> indices, const Rational& c = 1);

    bool is_zero() const { return terms.empty(); }
    /// -1 when inhomogeneous; 0 for the zero form by convention.
    int degree() const;
    bool is_homogeneous() const;

    void add_term(const Blade& b, const Rational& c);
    Form scaled(const Rational& c) const;
    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    bool operator==(const Form& o) const { return dim == o.dim && terms == o.terms; }
};

/// Antisymmetric coefficient array J^{ab}; pairs with 2-form indices to take
/// traces.
struct Bivector {
    int dim = 0;
    std::vector<std::vector<Rational>> entries;  // dense dim x dim, antisymmetric

    Bivector() = default;
    explicit Bivector(int dim)
        : dim(dim), entries(dim, std::vector<Rational>(dim, Rational(0))) {}
    void set(int a, int b, const Rational& v);  // enforces antisymmetry (1-based)
    const Rational& get(int a, int b) const { return entries[a - 1][b - 1]; }
};

/// All C(m,k) degree-k blades in canonical order.
std::vector<Blade> enumerate_basis(int m, int k);

/// Position of a blade in enumerate_basis(m, degree).
int blade_index(const Blade& b);

/// Graded-anticommutative product with permutation-parity signs.
Form wedge(const Form& a, const Form& b);

/// For homogeneous F of degree p: the matrix of F ^ _ : Lambda^k -> Lambda^{k+p}
/// in canonical blade bases, shaped C(m,k+p) x C(m,k).
Matrix wedge_map(const Form& F, int k);

/// Trace against a bivector: sum over index pairs a<b of J^{ab} applied to the
/// (a,b)-slots of w. One representative per unordered pair, so the standard
/// symplectic pair gives contract(Jinv, J) = n. Requires degree >= 2.
Form contract(const Bivector& jinv, const Form& w);

/// Matrix of contract(jinv, .) : Lambda^k -> Lambda^{k-2}.
Matrix contract_map(const Bivector& jinv, int k);

/// Interior product i_{e_index} in coordinates.
Form interior(int index, const Form& w);

Vec form_to_vec(const Form& f, int degree);
Form vec_to_form(const Vec& v, int m, int degree);

/// w^power by repeated wedge; power 0 gives the unit.
Form wedge_power(const Form& w, int power);

}  // namespace coeffective

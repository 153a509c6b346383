#include "coeffective/exterior.hpp"

#include <bit>
#include <stdexcept>

namespace coeffective {

namespace {

void check_index_range(int dim, int idx) {
    if (idx < 1 || idx > dim) throw std::invalid_argument("blade index out of range");
    if (dim > 63) throw std::invalid_argument("ambient dimension too large");
}

int popcount_below(std::uint64_t bits, int index) {
    std::uint64_t mask = (index <= 1) ? 0 : ((std::uint64_t{1} << (index - 1)) - 1);
    return std::popcount(bits & mask);
}

}  // namespace

Blade::Blade(int dim, std::initializer_list<int> indices) : dim(dim) {
    int prev = 0;
    for (int i : indices) {
        check_index_range(dim, i);
        if (i <= prev) throw std::invalid_argument("blade indices must strictly increase");
        prev = i;
        bits |= std::uint64_t{1} << (i - 1);
    }
}

Blade::Blade(int dim, const std::vector<int>& indices) : dim(dim) {
    int prev = 0;
    for (int i : indices) {
        check_index_range(dim, i);
        if (i <= prev) throw std::invalid_argument("blade indices must strictly increase");
        prev = i;
        bits |= std::uint64_t{1} << (i - 1);
    }
}

int Blade::degree() const { return std::popcount(bits); }

std::vector<int> Blade::indices() const {
    std::vector<int> out;
    for (int i = 1; i <= dim; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

bool Blade::operator<(const Blade& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db;
    // lex on increasing index lists == numeric order after bit reversal;
    // small dims, so compare index vectors directly
    std::uint64_t a = bits, b = o.bits;
    while (a && b) {
        int ia = std::countr_zero(a), ib = std::countr_zero(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

Form Form::unit(int dim) {
    Form f(dim);
    f.terms.emplace(Blade::from_bits(dim, 0), Rational(1));
    return f;
}

Form Form::basis_form(int dim, std::initializer_list<int> indices, const Rational& c) {
    Form f(dim);
    if (c != 0) f.terms.emplace(Blade(dim, indices), c);
    return f;
}

int Form::degree() const {
    if (terms.empty()) return 0;
    int d = terms.begin()->first.degree();
    for (const auto& [b, c] : terms)
        if (b.degree() != d) return -1;
    return d;
}

bool Form::is_homogeneous() const { return degree() >= 0; }

void Form::add_term(const Blade& b, const Rational& c) {
    if (c == 0) return;
    if (b.dim != dim) throw std::invalid_argument("blade dimension mismatch");
    auto it = terms.find(b);
    if (it == terms.end()) {
        terms.emplace(b, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Form Form::scaled(const Rational& c) const {
    Form out(dim);
    if (c == 0) return out;
    for (const auto& [b, v] : terms) out.terms.emplace(b, v * c);
    return out;
}

Form Form::operator+(const Form& o) const {
    if (dim != o.dim) throw std::invalid_argument("form dimension mismatch");
    Form out = *this;
    for (const auto& [b, v] : o.terms) out.add_term(b, v);
    return out;
}

Form Form::operator-(const Form& o) const { return *this + o.scaled(-1); }

void Bivector::set(int a, int b, const Rational& v) {
    if (a < 1 || a > dim || b < 1 || b > dim) throw std::out_of_range("bivector index");
    if (a == b && v != 0) throw std::invalid_argument("bivector diagonal must be zero");
    entries[a - 1][b - 1] = v;
    entries[b - 1][a - 1] = -v;
}

std::vector<Blade> enumerate_basis(int m, int k) {
    if (k < 0 || k > m) throw std::invalid_argument("degree out of range");
    std::vector<Blade> out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    if (k == 0) {
        out.push_back(Blade::from_bits(m, 0));
        return out;
    }
    while (true) {
        out.push_back(Blade(m, idx));
        int i = k - 1;
        while (i >= 0 && idx[i] == m - (k - 1 - i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

int blade_index(const Blade& b) {
    // lex rank of the index list among C(dim, degree) combinations
    static auto binom = [](int n, int k) -> long {
        if (k < 0 || k > n) return 0;
        long r = 1;
        for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return r;
    };
    int k = b.degree();
    long rank = 0;
    int prev = 0, pos = 0;
    for (int i : b.indices()) {
        for (int j = prev + 1; j < i; ++j) rank += binom(b.dim - j, k - pos - 1);
        prev = i;
        ++pos;
    }
    return static_cast<int>(rank);
}

Form wedge(const Form& a, const Form& b) {
    if (a.dim != b.dim) throw std::invalid_argument("wedge: dimension mismatch");
    Form out(a.dim);
    for (const auto& [ba, ca] : a.terms) {
        for (const auto& [bb, cb] : b.terms) {
            if (ba.bits & bb.bits) continue;  // repeated index
            int inversions = 0;
            std::uint64_t t = ba.bits;
            while (t) {
                int i = std::countr_zero(t) + 1;
                t &= t - 1;
                inversions += popcount_below(bb.bits, i);
            }
            Rational c = ca * cb;
            if (inversions & 1) c = -c;
            out.add_term(Blade::from_bits(a.dim, ba.bits | bb.bits), c);
        }
    }
    return out;
}

Matrix wedge_map(const Form& F, int k) {
    if (!F.is_homogeneous()) throw std::invalid_argument("wedge_map: inhomogeneous form");
    int p = F.degree();
    int m = F.dim;
    if (k < 0 || k + p > m) throw std::invalid_argument("wedge_map: degree out of range");
    auto src = enumerate_basis(m, k);
    auto dst = enumerate_basis(m, k + p);
    Matrix out(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (int j = 0; j < static_cast<int>(src.size()); ++j) {
        Form img = wedge(F, [&] {
            Form e(m);
            e.terms.emplace(src[j], Rational(1));
            return e;
        }());
        for (const auto& [b, c] : img.terms) out.set(blade_index(b), j, c);
    }
    return out;
}

Form interior(int index, const Form& w) {
    Form out(w.dim);
    for (const auto& [b, c] : w.terms) {
        if (!b.contains(index)) continue;
        int sign_exp = popcount_below(b.bits, index);
        Rational c2 = (sign_exp & 1) ? -c : c;
        out.add_term(Blade::from_bits(w.dim, b.bits & ~(std::uint64_t{1} << (index - 1))), c2);
    }
    return out;
}

Form contract(const Bivector& jinv, const Form& w) {
    if (jinv.dim != w.dim) throw std::invalid_argument("contract: dimension mismatch");
    if (!w.is_zero() && (!w.is_homogeneous() || w.degree() < 2))
        throw std::invalid_argument("contract: degree must be at least 2");
    Form out(w.dim);
    for (int a = 1; a <= w.dim; ++a)
        for (int b = a + 1; b <= w.dim; ++b) {
            const Rational& jab = jinv.get(a, b);
            if (jab == 0) continue;
            Form piece = interior(b, interior(a, w));
            out = out + piece.scaled(jab);
        }
    return out;
}

Matrix contract_map(const Bivector& jinv, int k) {
    if (k < 2) throw std::invalid_argument("contract_map: degree must be at least 2");
    auto src = enumerate_basis(jinv.dim, k);
    auto dst = enumerate_basis(jinv.dim, k - 2);
    Matrix out(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (int j = 0; j < static_cast<int>(src.size()); ++j) {
        Form e(jinv.dim);
        e.terms.emplace(src[j], Rational(1));
        Form img = contract(jinv, e);
        for (const auto& [b, c] : img.terms) out.set(blade_index(b), j, c);
    }
    return out;
}

Vec form_to_vec(const Form& f, int degree) {
    auto basis = enumerate_basis(f.dim, degree);
    Vec v(basis.size(), Rational(0));
    for (const auto& [b, c] : f.terms) {
        if (b.degree() != degree) throw std::invalid_argument("form_to_vec: degree mismatch");
        v[blade_index(b)] = c;
    }
    return v;
}

Form vec_to_form(const Vec& v, int m, int degree) {
    auto basis = enumerate_basis(m, degree);
    if (v.size() != basis.size()) throw std::invalid_argument("vec_to_form: length mismatch");
    Form f(m);
    for (size_t i = 0; i < basis.size(); ++i)
        if (v[i] != 0) f.terms.emplace(basis[i], v[i]);
    return f;
}

Form wedge_power(const Form& w, int power) {
    if (power < 0) throw std::invalid_argument("negative wedge power");
    Form out = Form::unit(w.dim);
    for (int i = 0; i < power; ++i) out = wedge(out, w);
    return out;
}

}  // namespace coeffective

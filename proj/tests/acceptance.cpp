// Acceptance suite: every criterion prints one PASS/FAIL line and the wall
// time it took; the stated time budgets are enforced. Exit code 0 only when
// every criterion passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coeffective/builder.hpp"
#include "coeffective/homology.hpp"
#include "coeffective/model.hpp"
#include "coeffective/serialize.hpp"
#include "coeffective/strands.hpp"
#include "support/random_forms.hpp"

using namespace coeffective;

namespace {

StructureData builtin_structure(const std::string& name, int n = 0) {
    return StructureData::from_model_data(builtin(name, n).model());
}

LESReport predict_for(const StructureData& s) {
    auto plain = model_cohomology(s.model, s.alpha, 0);
    auto twisted = model_cohomology(s.model, s.alpha, 2);
    auto cups = cup_family(plain, twisted, s.F);
    LESKind kind = s.kind == CalKind::G2 ? LESKind::G2 : LESKind::Symplectic;
    return les_predict(kind, s.model.dim / 2, plain.table.dims, twisted.table.dims, cups);
}

std::vector<int> direct_for(const StructureData& s) {
    return cohomology(build_extended_complex(s).cochain()).dims;
}

bool exact_at(const CochainComplex& cx, const std::vector<int>& ranks, int r) {
    int out = (r < static_cast<int>(ranks.size())) ? ranks[r] : 0;
    int in = (r > 0) ? ranks[r - 1] : 0;
    return cx.dims[r] - out == in;
}

std::vector<int> complex_ranks(const CochainComplex& cx) {
    std::vector<int> ranks(cx.diffs.size());
    for (size_t r = 0; r < cx.diffs.size(); ++r) ranks[r] = rank(cx.diffs[r]);
    return ranks;
}

Form sample_covector(std::mt19937_64& rng, int m) {
    while (true) {
        Form xi(m);
        for (int i = 1; i <= m; ++i) {
            int c = static_cast<int>(rng() % 19) - 9;
            if (c != 0) xi.add_term(Blade(m, {i}), Rational(c));
        }
        if (!xi.is_zero()) return xi;
    }
}

// ---- criteria --------------------------------------------------------------

bool criterion1_cpn(std::string& detail) {
    for (int n : {2, 3}) {
        auto ring = builtin("cpn", n).ring();
        auto rep = les_predict(LESKind::Symplectic, n, ring.betti, ring.betti, ring.cup);
        std::vector<int> want(2 * n + 2, 0);
        want.front() = want.back() = 1;
        if (rep.predicted != want) {
            detail = "cpn n=" + std::to_string(n) + " prediction off";
            return false;
        }
    }
    return true;
}

bool criterion2_g2_profile(std::string& detail) {
    auto cal = standard_g2();
    const ColumnClass want_cls[5] = {ColumnClass::Injective, ColumnClass::Injective,
                                     ColumnClass::Isomorphism, ColumnClass::Surjective,
                                     ColumnClass::Surjective};
    const int want_rank[5] = {1, 7, 21, 7, 1};
    for (int k = 0; k <= 4; ++k) {
        if (cal.profile.at(k).cls != want_cls[k] || cal.profile.at(k).rank != want_rank[k]) {
            detail = "profile off at k=" + std::to_string(k);
            return false;
        }
    }
    if (kernel_basis(wedge_map(cal.F, 3)).size() != 28 ||
        kernel_basis(wedge_map(cal.F, 4)).size() != 34) {
        detail = "kernel dimensions off";
        return false;
    }
    return true;
}

bool criterion3_symplectic_oracle(std::string& detail) {
    struct Case {
        const char* name;
        int n;
        std::vector<int> expect;  // empty: only require direct == predicted
    };
    const Case cases[] = {
        {"torus", 2, {1, 4, 5, 5, 4, 1}},
        {"torus", 3, {}},
        {"hopf4", 0, {0, 1, 1, 0, 1, 1}},
        {"kodaira_thurston", 0, {}},
    };
    for (const auto& c : cases) {
        auto s = builtin_structure(c.name, c.n);
        auto rep = predict_for(s);
        auto direct = direct_for(s);
        if (direct != rep.predicted) {
            detail = std::string(c.name) + ": direct != predicted";
            return false;
        }
        if (!c.expect.empty() && direct != c.expect) {
            detail = std::string(c.name) + ": table is not the frozen value";
            return false;
        }
    }
    auto hopf = builtin_structure("hopf4");
    for (int d : twisted_cohomology(hopf.model, hopf.alpha, 2).dims)
        if (d != 0) {
            detail = "hopf twisted Betti not all zero";
            return false;
        }
    return true;
}

bool criterion4_g2_oracle(std::string& detail) {
    auto s = builtin_structure("torus7_g2");
    std::vector<int> want{1, 7, 21, 34, 28, 28, 34, 21, 7, 1};
    auto rep = predict_for(s);
    auto direct = direct_for(s);
    if (rep.predicted != want || direct != want) {
        detail = "torus7_g2 tables off";
        return false;
    }
    return true;
}

bool criterion5_ellipticity(std::string& detail) {
    const int samples = 100;
    std::vector<Calibration> shapes;
    for (int n : {2, 3, 4}) shapes.push_back(standard_symplectic(n));
    shapes.push_back(standard_g2());
    std::mt19937_64 rng(7);
    for (const auto& cal : shapes) {
        for (int s = 0; s < samples; ++s) {
            Form xi = sample_covector(rng, cal.dim);
            auto cx = symbol_complex(cal, xi);
            auto ranks = complex_ranks(cx);
            for (int r = 0; r < cx.length(); ++r)
                if (!exact_at(cx, ranks, r)) {
                    detail = "full symbol complex not exact (dim " + std::to_string(cal.dim) +
                             ", position " + std::to_string(r) + ")";
                    return false;
                }
        }
    }
    // the coeffective half alone: exact except at its first position
    for (int n : {2, 3, 4}) {
        auto cal = standard_symplectic(n);
        for (int s = 0; s < samples; ++s) {
            Form xi = sample_covector(rng, 2 * n);
            auto cx = symbol_complex_second_half(cal, xi);
            auto ranks = complex_ranks(cx);
            if (exact_at(cx, ranks, 0)) {
                detail = "second-half symbol complex unexpectedly exact at its first position";
                return false;
            }
            for (int r = 1; r < cx.length(); ++r)
                if (!exact_at(cx, ranks, r)) {
                    detail = "second-half symbol complex not exact at position " +
                             std::to_string(r);
                    return false;
                }
        }
    }
    return true;
}

bool criterion6_local_exactness(std::string& detail) {
    for (int n : {2, 3}) {
        StrandBuilder sb(standard_symplectic(n));
        for (int h = 0; h <= 6; ++h) {
            auto dims = cohomology(sb.strand(h)).dims;
            for (int r = 0; r < static_cast<int>(dims.size()); ++r) {
                int want = (h == 0 && r == 0) ? 1 : (h == 2 && r == 1) ? 1 : 0;
                if (dims[r] != want) {
                    detail = "symplectic m=" + std::to_string(2 * n) + " strand h=" +
                             std::to_string(h) + " position " + std::to_string(r);
                    return false;
                }
            }
        }
    }
    StrandBuilder sb(standard_g2());
    for (int h = 0; h <= 4; ++h) {
        auto dims = cohomology(sb.strand(h)).dims;
        for (int r = 0; r < static_cast<int>(dims.size()); ++r) {
            int want = (h == 0 && r == 0) ? 1 : (h == 3 && r == 2) ? 1 : 0;
            if (dims[r] != want) {
                detail = "g2 strand h=" + std::to_string(h) + " position " + std::to_string(r);
                return false;
            }
        }
    }
    return true;
}

bool criterion7_structural(std::string& detail) {
    // d after d = 0 on every builtin, across the middle
    std::vector<StructureData> structures;
    structures.push_back(builtin_structure("torus", 2));
    structures.push_back(builtin_structure("torus", 3));
    structures.push_back(builtin_structure("hopf4"));
    structures.push_back(builtin_structure("kodaira_thurston"));
    structures.push_back(builtin_structure("torus7_g2"));
    for (const auto& s : structures) {
        auto cx = build_extended_complex(s).cochain();
        try {
            cx.validate(true);
        } catch (const std::exception&) {
            detail = s.model.name + ": d after d != 0";
            return false;
        }
    }
    // middle operator vanishes on F ^ tau representatives
    testsupport::Rng rng(123);
    for (const char* name : {"hopf4", "kodaira_thurston"}) {
        auto s = builtin_structure(name);
        for (int t = 0; t < 20; ++t) {
            Form tau = rng.form(4, 0);
            if (!middle_operator(s, wedge(s.F, tau)).is_zero()) {
                detail = std::string(name) + ": middle operator nonzero on F ^ tau";
                return false;
            }
        }
    }
    // Lepage round trip, 1000 random forms per (n, k), n <= 3
    for (int n : {2, 3}) {
        auto cal = standard_symplectic(n);
        for (int k = 0; k <= n; ++k) {
            for (int t = 0; t < 1000; ++t) {
                Form w = rng.form(2 * n, k);
                auto parts = lepage_decompose(cal, w);
                Form rebuilt(2 * n);
                for (size_t j = 0; j < parts.size(); ++j) {
                    rebuilt = rebuilt + wedge(wedge_power(cal.F, static_cast<int>(j)), parts[j]);
                    if (k - 2 * static_cast<int>(j) >= 2 &&
                        !contract(*cal.Finv, parts[j]).is_zero()) {
                        detail = "lepage component not trace-free";
                        return false;
                    }
                }
                if (!(rebuilt == w)) {
                    detail = "lepage reassembly failed";
                    return false;
                }
            }
        }
    }
    // pairing Gram matrices non-degenerate, n = 2, k <= 2
    {
        auto cal = standard_symplectic(2);
        for (int k = 0; k <= 2; ++k) {
            auto basis = trace_free_basis(cal, k);
            int d = static_cast<int>(basis.size());
            Matrix gram(d, d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) gram.set(i, j, pairing(cal, basis[i], basis[j]));
            if (rank(gram) != d) {
                detail = "pairing Gram matrix degenerate at k=" + std::to_string(k);
                return false;
            }
        }
    }
    // constant rescaling F -> lambda F leaves all dimensions unchanged
    for (const char* name : {"hopf4", "torus7_g2"}) {
        auto base = builtin_structure(name);
        auto ref = build_extended_complex(base).cochain();
        auto ref_h = cohomology(ref).dims;
        for (int lambda : {2, -3}) {
            auto s = base;
            s.F = s.F.scaled(lambda);
            auto cx = build_extended_complex(s).cochain();
            if (cx.dims != ref.dims || cohomology(cx).dims != ref_h) {
                detail = std::string(name) + ": rescaling changed dimensions";
                return false;
            }
        }
    }
    return true;
}

bool criterion8_determinism(std::string& detail) {
#ifndef COEFFECTIVE_CLI_PATH
    detail = "CLI path not configured";
    return false;
#else
    std::string cli = COEFFECTIVE_CLI_PATH;
    std::string tmp1 = "acceptance_report_1.md", tmp2 = "acceptance_report_2.md";
    std::string cmd1 = cli + " report --seed 7 --out " + tmp1;
    std::string cmd2 = cli + " report --seed 7 --out " + tmp2;
    if (std::system(cmd1.c_str()) != 0 || std::system(cmd2.c_str()) != 0) {
        detail = "report subcommand failed";
        return false;
    }
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::string a = slurp(tmp1), b = slurp(tmp2);
    std::remove(tmp1.c_str());
    std::remove(tmp2.c_str());
    if (a.empty() || a != b) {
        detail = "report runs differ or are empty";
        return false;
    }
    return true;
#endif
}

struct Criterion {
    int number;
    const char* name;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "CP^n table (prediction has only the two end classes)", 1.0, criterion1_cpn},
        {2, "G2 rank profile (inj/inj/iso/surj/surj; ranks 1,7,21,7,1; kernels 28,34)", 1.0,
         criterion2_g2_profile},
        {3, "symplectic oracle equivalence (torus2, torus3, hopf4, kodaira_thurston)", 5.0,
         criterion3_symplectic_oracle},
        {4, "G2 oracle equivalence (torus7_g2, both routes (1,7,21,34,28,...))", 10.0,
         criterion4_g2_oracle},
        {5, "ellipticity sweep (100 covectors per shape; plus the half-complex)", 60.0,
         criterion5_ellipticity},
        {6, "local exactness (strand sweeps m=4,6 h<=6 and G2 h<=4)", 120.0,
         criterion6_local_exactness},
        {7, "structural properties (d.d=0, middle, Lepage, pairing, rescaling)", 60.0,
         criterion7_structural},
        {8, "determinism (two report runs are byte-identical)", 30.0, criterion8_determinism},
    };

    bool all_pass = true;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_seconds) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
        }
        std::printf("criterion %d [%s]: %s (%.2f s%s)\n", c.number, c.name,
                    ok ? "PASS" : "FAIL", secs, detail.empty() ? "" : ("; " + detail).c_str());
        all_pass = all_pass && ok;
    }
    return all_pass ? 0 : 1;
}

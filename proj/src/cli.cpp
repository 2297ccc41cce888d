#include "lehmer/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "lehmer/lehmer.hpp"
#include "lehmer/linalg.hpp"
#include "lehmer/poly_io.hpp"
#include "lehmer/qcomb.hpp"
#include "lehmer/series.hpp"

namespace lehmer::cli {

namespace {

using nlohmann::json;

// Largest size accepted for any dimension or degree argument.
constexpr std::int64_t kMaxArg = 100000;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::uint32_t checked(std::int64_t value, std::int64_t lo, const char* name) {
    if (value < lo || value > kMaxArg) {
        throw UsageError(std::string(name) + " must lie in [" + std::to_string(lo) + ", " +
                         std::to_string(kMaxArg) + "], got " + std::to_string(value));
    }
    return static_cast<std::uint32_t>(value);
}

json ratfunc_json(const RatFunc& r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

bool needs_uv(const RatFunc& r) {
    return !r.num().has_integral_qz_exponents() || !r.den().has_integral_qz_exponents();
}

void print_poly(std::ostream& out, const Poly2& p, bool as_json) {
    if (as_json) {
        out << to_json(p).dump() << '\n';
        return;
    }
    if (preferred_view(p) == VarView::uv) out << kUvHeader << '\n';
    out << to_text(p) << '\n';
}

void cmd_matrix(std::ostream& out, std::uint32_t n, bool as_json) {
    const auto m = lehmer_matrix(n);
    if (as_json) {
        json j = {{"n", n}, {"diag", json::array()}, {"super", json::array()}, {"sub", json::array()}};
        for (const auto& d : m.diag) j["diag"].push_back(to_json(d));
        for (const auto& s : m.super) j["super"].push_back(to_json(s));
        for (const auto& s : m.sub) j["sub"].push_back(to_json(s));
        out << j.dump() << '\n';
        return;
    }
    if (n > 1) out << kUvHeader << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j) out << ", ";
            out << to_text(m(i, j));
        }
        out << '\n';
    }
}

void cmd_lu(std::ostream& out, std::uint32_t n, bool generic, bool as_json) {
    const auto f = generic ? lu_generic<RatFunc>(lehmer_matrix(n)) : closed_factors(n);
    if (as_json) {
        json j = {{"n", n}, {"u_diag", json::array()}, {"u_super", json::array()}, {"l_sub", json::array()}};
        for (const auto& x : f.u_diag) j["u_diag"].push_back(ratfunc_json(x));
        for (const auto& x : f.u_super) j["u_super"].push_back(ratfunc_json(x));
        for (const auto& x : f.l_sub) j["l_sub"].push_back(ratfunc_json(x));
        out << j.dump() << '\n';
        return;
    }
    const bool uv = std::any_of(f.u_super.begin(), f.u_super.end(), needs_uv) ||
                    std::any_of(f.l_sub.begin(), f.l_sub.end(), needs_uv);
    if (uv) out << kUvHeader << '\n';
    for (std::size_t j = 0; j < n; ++j) {
        const auto idx = [](std::size_t a, std::size_t b) {
            return "[" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "] = ";
        };
        out << "U" << idx(j, j) << to_text(f.u_diag[j]) << '\n';
        if (j + 1 < n) {
            out << "U" << idx(j, j + 1) << to_text(f.u_super[j]) << '\n';
            out << "L" << idx(j + 1, j) << to_text(f.l_sub[j]) << '\n';
        }
    }
}

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

std::vector<Check> run_checks(std::uint32_t n) {
    std::vector<Check> checks;
    const auto m = lehmer_matrix(n);
    const auto closed = closed_factors(n);
    const Poly2 det = det_closed(n);

    checks.push_back({"lambda_sum == lambda_rec", lambda_sum(n) == lambda_rec(n)[n], ""});

    {
        Check c{"lu_generic == closed_factors", true, ""};
        try {
            const auto generic = lu_generic<RatFunc>(m);
            for (std::size_t j = 0; j < n && c.pass; ++j) {
                if (!ratfunc_eq(generic.u_diag[j], closed.u_diag[j])) {
                    c = {c.name, false, "U[" + std::to_string(j + 1) + "," + std::to_string(j + 1) + "]"};
                } else if (j + 1 < n && !ratfunc_eq(generic.u_super[j], closed.u_super[j])) {
                    c = {c.name, false, "U[" + std::to_string(j + 1) + "," + std::to_string(j + 2) + "]"};
                } else if (j + 1 < n && !ratfunc_eq(generic.l_sub[j], closed.l_sub[j])) {
                    c = {c.name, false, "L[" + std::to_string(j + 2) + "," + std::to_string(j + 1) + "]"};
                }
            }
        } catch (const ZeroPivot& e) {
            c = {c.name, false, e.what()};
        }
        checks.push_back(std::move(c));
    }

    {
        const auto pc = product_check(closed, m);
        std::string detail;
        if (pc.first_failure) {
            detail = "entry (" + std::to_string(pc.first_failure->first + 1) + "," +
                     std::to_string(pc.first_failure->second + 1) + ")";
        }
        checks.push_back({"L*U == M", pc.ok, detail});
    }

    {
        RatFunc telescoped = 1;
        for (const auto& d : closed.u_diag) telescoped *= d;
        checks.push_back({"prod U[j,j] == lambda(n)", ratfunc_eq(telescoped, RatFunc(det)), ""});
    }

    checks.push_back({"det_cofactor == det_closed", det_cofactor(m) == det, ""});
    checks.push_back({"det_bareiss == det_closed", det_bareiss(densify(m)) == det, ""});
    return checks;
}

int cmd_verify(std::ostream& out, std::uint32_t n, bool as_json) {
    const auto checks = run_checks(n);
    const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    if (as_json) {
        json j = {{"n", n}, {"ok", ok}, {"checks", json::array()}};
        for (const auto& c : checks) {
            json entry = {{"name", c.name}, {"pass", c.pass}};
            if (!c.detail.empty()) entry["detail"] = c.detail;
            j["checks"].push_back(std::move(entry));
        }
        out << j.dump() << '\n';
    } else {
        for (const auto& c : checks) {
            out << (c.pass ? "PASS " : "FAIL ") << c.name;
            if (!c.detail.empty()) out << " (" << c.detail << ")";
            out << '\n';
        }
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

void cmd_limit(std::ostream& out, std::uint32_t zdeg, std::uint32_t qdeg, bool as_json) {
    const Series2 s = limit_det(zdeg, qdeg);
    if (as_json) {
        out << json{{"zdeg", zdeg}, {"qdeg", qdeg}, {"terms", to_json(s.to_poly())}}.dump() << '\n';
        return;
    }
    for (std::uint32_t i = 0; i <= zdeg; ++i) out << "z^" << i << ": " << to_text(s.coeff(i)) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations for Lehmer's tridiagonal q-matrix", "lehmer"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit JSON instead of canonical text");

    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t zdeg = 0;
    std::int64_t qdeg = 0;
    bool generic = false;

    auto* lambda = app.add_subcommand("lambda", "Print lambda(j)");
    lambda->add_option("j", a)->required();
    auto* matrix = app.add_subcommand("matrix", "Print the n x n matrix M(n)");
    matrix->add_option("n", a)->required();
    auto* det = app.add_subcommand("det", "Print det M(n)");
    det->add_option("n", a)->required();
    auto* lu = app.add_subcommand("lu", "Print the LU factors of M(n)");
    lu->add_option("n", a)->required();
    lu->add_flag("--generic", generic, "Factor by elimination instead of the closed forms");
    auto* verify = app.add_subcommand("verify", "Cross-check the closed forms against the elimination oracles");
    verify->add_option("n", a)->required();
    auto* qbin = app.add_subcommand("qbinom", "Print the Gaussian binomial [n, k]");
    qbin->add_option("n", a)->required();
    qbin->add_option("k", b)->required();
    auto* limit = app.add_subcommand("limit", "Print the infinite-limit determinant series");
    limit->add_option("--zdeg", zdeg, "Highest power of z kept")->required();
    limit->add_option("--qdeg", qdeg, "Highest power of q kept")->required();
    auto* stab = app.add_subcommand("stabilize", "Agreement degree of [z^k] det M(n) with the limit");
    stab->add_option("n", a)->required();
    stab->add_option("k", b)->required();
    auto* dyck = app.add_subcommand("dyck", "Count Dyck paths of half-length m and height at most h");
    dyck->add_option("m", a)->required();
    dyck->add_option("height", b, "Maximum height h")->required();

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*lambda) {
            print_poly(out, lambda_sum(checked(a, 0, "j")), as_json);
        } else if (*matrix) {
            cmd_matrix(out, checked(a, 1, "n"), as_json);
        } else if (*det) {
            print_poly(out, det_closed(checked(a, 1, "n")), as_json);
        } else if (*lu) {
            cmd_lu(out, checked(a, 1, "n"), generic, as_json);
        } else if (*verify) {
            return cmd_verify(out, checked(a, 1, "n"), as_json);
        } else if (*qbin) {
            const auto n = checked(a, 0, "n");
            if (b < -kMaxArg || b > kMaxArg) throw UsageError("k out of range");
            print_poly(out, qbinom(n, b).value, as_json);
        } else if (*limit) {
            cmd_limit(out, checked(zdeg, 0, "zdeg"), checked(qdeg, 0, "qdeg"), as_json);
        } else if (*stab) {
            const auto n = checked(a, 1, "n");
            const auto k = checked(b, 0, "k");
            if (2 * static_cast<std::int64_t>(k) > n) throw UsageError("stabilize needs 2k <= n");
            const auto d = stabilization_check(n, k);
            if (as_json) {
                json j = {{"n", n}, {"k", k}, {"agreement_q_degree", nullptr}};
                if (d) j["agreement_q_degree"] = *d;
                out << j.dump() << '\n';
            } else {
                out << (d ? std::to_string(*d) : std::string("inf")) << '\n';
            }
        } else if (*dyck) {
            const auto count = dyck_count(checked(a, 0, "m"), checked(b, 0, "h"));
            if (as_json) {
                out << json{{"m", a}, {"h", b}, {"count", count.get_str()}}.dump() << '\n';
            } else {
                out << count.get_str() << '\n';
            }
        }
    } catch (const UsageError& e) {
        err << "lehmer: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace lehmer::cli

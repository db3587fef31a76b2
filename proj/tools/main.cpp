#include <cxxabi.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nilcommute/closure.hpp"
#include "nilcommute/io.hpp"
#include "nilcommute/witnesses.hpp"

namespace nc = nilcommute;
using nc::Certificate;
using nc::FieldSpec;
using nc::Matrix;
using nc::NilTuple;
using nc::Partition;
using nc::Rng;
using nc::Scalar;
using nc::Verdict;

namespace {

std::string error_name(const std::exception& e) {
    int status = 0;
    char* dem = abi::__cxa_demangle(typeid(e).name(), nullptr, nullptr, &status);
    std::string name = (status == 0 && dem != nullptr) ? dem : typeid(e).name();
    std::free(dem);
    auto pos = name.rfind("::");
    if (pos != std::string::npos) name = name.substr(pos + 2);
    return name;
}

FieldSpec parse_field(const std::string& s) {
    if (s == "q" || s == "Q") return FieldSpec::rationals();
    if (s.rfind("fp:", 0) == 0) {
        std::uint64_t p = 0;
        try {
            std::size_t used = 0;
            p = std::stoull(s.substr(3), &used);
            if (used != s.size() - 3) throw std::invalid_argument(s);
        } catch (const std::exception&) {
            throw nc::SchemaError("--field", "expected q or fp:<prime>");
        }
        return FieldSpec::prime_field(p);
    }
    throw nc::SchemaError("--field", "expected q or fp:<prime>");
}

Partition parse_partition(const std::string& s) {
    std::vector<std::size_t> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stoull(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw nc::BadPartition("unparseable part '" + item + "'");
        }
    }
    return Partition(parts);
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw nc::SchemaError(path, "cannot open file");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw nc::SchemaError(path, e.what());
    }
    return j;
}

void write_text(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw nc::SchemaError(path, "cannot open for writing");
    out << text;
}

void write_tuple_file(const NilTuple& t, const std::string& path) {
    write_text(nc::json_of_tuple(t).dump(2) + "\n", path);
}

int finish(const Certificate& cert, const std::string& out) {
    write_text(nc::certificate_to_string(cert), out);
    return cert.verdict == Verdict::Fail ? 1 : 0;
}

Certificate make_cert(const std::string& name, const FieldSpec& f, std::uint64_t seed,
                      std::uint64_t trials) {
    Certificate cert;
    cert.name = name;
    cert.field = f;
    cert.seed = seed;
    cert.trials = trials;
    return cert;
}

Matrix random_matrix(Rng& rng, const FieldSpec& f, std::size_t rows, std::size_t cols) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.scalar(f);
    return m;
}

Matrix random_invertible(Rng& rng, const FieldSpec& f, std::size_t n) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Matrix m = random_matrix(rng, f, n, n);
        if (nc::is_invertible(m)) return m;
    }
    throw nc::ResolutionFailure("no invertible draw after bounded retries");
}

nlohmann::json json_of_scalar_list(const std::vector<Scalar>& xs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : xs) arr.push_back(x.to_string());
    return arr;
}

// ---- subcommand handlers ----

int run_gerstenhaber(std::size_t n, const FieldSpec& f, std::uint64_t seed,
                     const std::string& emit_tuple, const std::string& out) {
    NilTuple t = nc::gerstenhaber_quadruple(n, f);
    std::size_t dim = nc::algebra_dim_closure(t);
    Certificate cert = make_cert("gerstenhaber", f, seed, 0);
    cert.add("n", n);
    cert.add("members", t.d());
    cert.add("algebra_dim", dim);
    cert.add("expected_dim", n + 1);
    cert.verdict = dim == n + 1 ? Verdict::Pass : Verdict::Fail;
    if (!emit_tuple.empty()) write_tuple_file(t, emit_tuple);
    return finish(cert, out);
}

int run_basili(const Partition& lam, const FieldSpec& f, std::uint64_t seed,
               const std::string& out) {
    auto [a, b] = nc::basili_pair(lam, f);
    const bool nil = nc::is_nilpotent(b).nilpotent;
    const bool comm = b.commutes_with(a);
    const std::size_t kdim =
        nc::subspace_intersection(nc::kernel_basis(a), nc::kernel_basis(b)).size();
    const std::size_t adim = nc::algebra_dim_closure(std::vector<Matrix>{a, b});
    const std::size_t scdim = nc::self_centralizing_dim(a, b);
    Certificate cert = make_cert("basili", f, seed, 0);
    cert.add("partition", lam.to_string());
    cert.add("b", nc::json_of_matrix(b));
    cert.add("b_nilpotent", nil);
    cert.add("b_commutes", comm);
    cert.add("kernel_intersection_dim", kdim);
    cert.add("algebra_dim", adim);
    cert.add("self_centralizing_dim", scdim);
    cert.verdict = nil && comm && kdim == 1 && adim == lam.n() && scdim == lam.n()
                       ? Verdict::Pass
                       : Verdict::Fail;
    return finish(cert, out);
}

int run_centralizer(const Partition& lam, const FieldSpec& f, std::uint64_t seed,
                    const std::string& out) {
    Matrix a = nc::jordan_matrix(lam, f);
    const std::size_t sylvester = nc::centralizer_basis(a).size();
    const std::size_t formula = nc::centralizer_dim_formula(lam);
    Certificate cert = make_cert("centralizer", f, seed, 0);
    cert.add("partition", lam.to_string());
    cert.add("centralizer_dim", sylvester);
    cert.add("formula_dim", formula);
    cert.add("nilpotent_centralizer_dim", nc::nilpotent_centralizer_dim(lam));
    cert.verdict = sylvester == formula ? Verdict::Pass : Verdict::Fail;
    return finish(cert, out);
}

int run_algebra_dim(const std::string& in, std::uint64_t seed, const std::string& out) {
    NilTuple t = nc::tuple_of_json(read_json_file(in), in);
    Certificate cert = make_cert("algebra-dim", t.field(), seed, 0);
    cert.add("n", t.n());
    cert.add("members", t.d());
    cert.add("algebra_dim", nc::algebra_dim_closure(t));
    cert.verdict = Verdict::Pass;
    return finish(cert, out);
}

int run_prop321_case(const std::string& case_name, const FieldSpec& f, const std::string& beta_str,
                     const std::optional<std::string>& omega_str, std::uint64_t seed,
                     const std::string& out) {
    nc::Prop321Case kind = nc::Prop321Case::Generic;
    if (case_name == "char2")
        kind = nc::Prop321Case::Char2;
    else if (case_name == "char3")
        kind = nc::Prop321Case::Char3;
    else if (case_name != "generic")
        throw nc::SchemaError("--case", "expected generic, char2 or char3");

    Scalar beta = Scalar::parse(f, beta_str);
    std::optional<Scalar> omega;
    if (omega_str) omega = Scalar::parse(f, *omega_str);
    nc::Prop321Solution sol = nc::prop321_solution(kind, f, beta, omega);
    nc::Prop321Checks checks = nc::prop321_check(sol.family, f);

    Certificate cert = make_cert("prop321", f, seed, 0);
    cert.add("case", case_name);
    cert.add("beta", beta.to_string());
    if (kind == nc::Prop321Case::Generic) {
        Scalar used = omega ? *omega
                            : Scalar::of_int(f, 2) * Scalar::of_int(f, 3).inverse();
        cert.add("omega", used.to_string());
    }
    for (std::size_t i = 0; i < sol.big.size(); ++i)
        cert.add("x" + std::to_string(i + 1), nc::json_of_matrix(sol.big[i]));
    cert.add("zeta", json_of_scalar_list(sol.family.zeta));
    cert.add("linear_x", checks.linear_x);
    cert.add("linear_z", checks.linear_z);
    cert.add("commute", checks.commute);
    cert.add("traceless", checks.traceless);
    cert.add("nilpotent", checks.nilpotent);
    cert.add("x1_one_regular", sol.x1_one_regular);
    cert.verdict = checks.all() ? Verdict::Pass : Verdict::Fail;
    return finish(cert, out);
}

int run_prop321_fiber(std::uint64_t p, std::uint64_t seed, const std::string& out) {
    auto sols = nc::prop321_fiber_bruteforce(p);
    Certificate cert = make_cert("prop321-fiber", FieldSpec::prime_field(p), seed, 0);
    cert.add("p", p);
    cert.add("count", sols.size());
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : sols) {
        nlohmann::json tup = nlohmann::json::array();
        for (std::uint32_t coord : s) tup.push_back(std::to_string(coord));
        arr.push_back(tup);
    }
    cert.add("solutions", arr);
    cert.verdict = Verdict::Pass;
    return finish(cert, out);
}

int run_squarezero(const Matrix& w, const Matrix& v, std::uint64_t seed, const std::string& out) {
    const bool m1 = v.cols() == 1;
    const auto pair = m1 ? nc::squarezero_pair_m1(w, v) : nc::squarezero_pair(w, v);
    Matrix n = m1 ? nc::squarezero_commutant_m1(w, v) : nc::squarezero_commutant(w, v);
    const bool nonzero = !n.is_zero();
    const bool nil = nc::is_nilpotent(n).nilpotent;
    const bool ca = n.commutes_with(pair.first);
    const bool cb = n.commutes_with(pair.second);
    Certificate cert = make_cert("squarezero", w.field(), seed, 0);
    cert.add("l", w.rows());
    cert.add("m", v.cols());
    cert.add("n", 2 * w.rows() + v.cols());
    cert.add("w", nc::json_of_matrix(w));
    cert.add("v", nc::json_of_matrix(v));
    cert.add("commutant", nc::json_of_matrix(n));
    cert.add("nonzero", nonzero);
    cert.add("nilpotent", nil);
    cert.add("commutes_with_a", ca);
    cert.add("commutes_with_b", cb);
    cert.verdict = nonzero && nil && ca && cb ? Verdict::Pass : Verdict::Fail;
    return finish(cert, out);
}

int run_prop1nonzero(std::size_t k, std::size_t n, const std::string& s_str,
                     const std::string& t_str, const FieldSpec& f, std::uint64_t trials,
                     std::uint64_t seed, const std::string& out) {
    Scalar s = Scalar::parse(f, s_str);
    Scalar t = Scalar::parse(f, t_str);
    nc::Prop1NonzeroPair pr = nc::prop1nonzero_pair(k, n, s, t);
    const Scalar beta = s * s, gamma = t * t;
    const std::size_t q = n - k;

    const bool y2 = (pr.y * pr.y).is_zero();
    const bool z2 = (pr.z * pr.z).is_zero();
    const bool yz = pr.y.commutes_with(pr.z);
    const bool ya = pr.y.commutes_with(pr.a);
    const bool za = pr.z.commutes_with(pr.a);
    // e1^T X' = e2^T X and beta X' e1 = -gamma X e2
    const bool rows_match = pr.xprime.block(0, 0, 1, q) == pr.x.block(1, 0, 1, q);
    const bool cols_match =
        (pr.xprime.block(0, 0, q, 1).scaled(beta) + pr.x.block(0, 1, q, 1).scaled(gamma))
            .is_zero();
    const bool x_nonzero = !pr.x.is_zero();

    Rng rng(seed);
    std::uint64_t validated = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        Scalar lam = rng.nonzero_scalar(f);
        try {
            NilTuple probe(std::vector<Matrix>{pr.a, pr.b + pr.y.scaled(lam),
                                               pr.c + pr.z.scaled(lam)});
            ++validated;
        } catch (const nc::Error&) {
        }
    }

    Certificate cert = make_cert("prop1nonzero", f, seed, trials);
    cert.add("k", k);
    cert.add("n", n);
    cert.add("s", s.to_string());
    cert.add("t", t.to_string());
    cert.add("y", nc::json_of_matrix(pr.y));
    cert.add("z", nc::json_of_matrix(pr.z));
    cert.add("y_square_zero", y2);
    cert.add("z_square_zero", z2);
    cert.add("yz_commute", yz);
    cert.add("y_commutes_with_a", ya);
    cert.add("z_commutes_with_a", za);
    cert.add("row_identity", rows_match);
    cert.add("column_identity", cols_match);
    cert.add("x_nonzero", x_nonzero);
    cert.add("lambda_samples_valid", validated);
    cert.verdict = y2 && z2 && yz && ya && za && rows_match && cols_match && x_nonzero &&
                           validated == trials
                       ? Verdict::Pass
                       : Verdict::Fail;
    return finish(cert, out);
}

int run_curve_verify(const Partition& lam, const FieldSpec& f, std::uint64_t trials,
                     std::uint64_t seed, const std::string& out) {
    nc::ParamFamily fam = nc::regularization_family(lam, f);
    NilTuple target(std::vector<Matrix>{nc::jordan_matrix(lam, f)});
    Certificate cert = nc::curve_verify(fam, target, trials, seed);
    cert.add("partition", lam.to_string());
    return finish(cert, out);
}

int run_sample_r1(std::size_t d, std::size_t n, const FieldSpec& f, std::uint64_t seed,
                  const std::string& emit_tuple, const std::string& out) {
    NilTuple t = nc::sample_R1(d, n, f, seed);
    const bool reg = nc::is_r_regular(t.mat(0), 1);
    const std::size_t dim = nc::algebra_dim_closure(t);
    Certificate cert = make_cert("sample-r1", f, seed, 0);
    cert.add("n", n);
    cert.add("members", d);
    cert.add("first_member_1_regular", reg);
    cert.add("algebra_dim", dim);
    cert.add("tuple", nc::json_of_tuple(t));
    cert.verdict = reg && dim <= n ? Verdict::Pass : Verdict::Fail;
    if (!emit_tuple.empty()) write_tuple_file(t, emit_tuple);
    return finish(cert, out);
}

int run_dims(std::size_t n, std::size_t d, std::uint64_t seed, const std::string& out) {
    Certificate cert = make_cert("dims", FieldSpec::rationals(), seed, 0);
    cert.add("n", n);
    cert.add("d", d);
    cert.add("r1_closure_dim", nc::r1_closure_dim(d, n));
    nlohmann::json rows = nlohmann::json::array();
    for (const Partition& lam : nc::partitions_of(n)) {
        rows.push_back({{"partition", lam.to_string()},
                        {"centralizer_dim", nc::centralizer_dim_formula(lam)},
                        {"nilpotent_centralizer_dim", nc::nilpotent_centralizer_dim(lam)},
                        {"d2_closure_dim", nc::d2_closure_dim(lam)}});
    }
    cert.add("partitions", rows);
    cert.verdict = Verdict::Pass;
    return finish(cert, out);
}

int run_certify_reducible(const std::string& in, const std::string& out) {
    NilTuple t = nc::tuple_of_json(read_json_file(in), in);
    return finish(nc::certify_reducible(t), out);
}

int run_transform(const std::string& in, const std::string& kind_name, std::uint64_t seed,
                  const std::string& q_file, const std::string& emit_tuple,
                  const std::string& out) {
    NilTuple t = nc::tuple_of_json(read_json_file(in), in);
    const FieldSpec& f = t.field();
    Rng rng(seed);
    nc::TupleTransform tr;
    Certificate cert = make_cert("transform", f, seed, 0);
    cert.add("kind", kind_name);
    if (kind_name == "conjugate") {
        tr.kind = nc::TupleTransform::Kind::Conjugate;
        tr.p = random_invertible(rng, f, t.n());
        cert.add("p", nc::json_of_matrix(*tr.p));
    } else if (kind_name == "span") {
        tr.kind = nc::TupleTransform::Kind::SpanChange;
        tr.g = random_invertible(rng, f, t.d());
        cert.add("g", nc::json_of_matrix(*tr.g));
    } else if (kind_name == "polyshift") {
        tr.kind = nc::TupleTransform::Kind::PolyShift;
        nlohmann::json polys = nlohmann::json::array();
        for (std::size_t i = 1; i < t.d(); ++i) {
            std::vector<Scalar> coeffs(t.n(), Scalar::zero(f));
            for (std::size_t e = 1; e < t.n(); ++e) coeffs[e] = rng.scalar(f);
            polys.push_back(json_of_scalar_list(coeffs));
            tr.polys.push_back(std::move(coeffs));
        }
        cert.add("polys", polys);
    } else if (kind_name == "transpose") {
        tr.kind = nc::TupleTransform::Kind::Transpose;
    } else if (kind_name == "twisted") {
        tr.kind = nc::TupleTransform::Kind::TwistedTranspose;
        if (q_file.empty()) throw nc::SchemaError("--q", "twisted transpose needs a q matrix");
        tr.q = nc::matrix_of_json(read_json_file(q_file), q_file);
        cert.add("q", nc::json_of_matrix(*tr.q));
    } else {
        throw nc::SchemaError("--kind",
                              "expected conjugate, span, polyshift, transpose or twisted");
    }
    NilTuple res = nc::tuple_transform(t, tr);
    cert.add("n", res.n());
    cert.add("members", res.d());
    cert.add("tuple", nc::json_of_tuple(res));
    cert.verdict = Verdict::Pass;
    if (!emit_tuple.empty()) write_tuple_file(res, emit_tuple);
    return finish(cert, out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact witnesses and certificates for commuting nilpotent matrices"};
    app.require_subcommand(1);

    std::string field_str = "q";
    std::string out;
    std::string emit_tuple;
    std::uint64_t seed = 0;
    int rc = 0;

    auto add_common = [&](CLI::App* cmd, bool with_field = true) {
        if (with_field) cmd->add_option("--field", field_str, "field: q or fp:<p>");
        cmd->add_option("--seed", seed, "rng seed");
        cmd->add_option("--out", out, "write certificate here instead of stdout");
        return cmd;
    };

    {
        auto* cmd = add_common(app.add_subcommand("gerstenhaber", "quadruple with algebra dim n+1"));
        auto n = std::make_shared<std::size_t>(0);
        cmd->add_option("--n", *n, "matrix size, at least 4")->required();
        cmd->add_option("--emit-tuple", emit_tuple, "also write the tuple JSON here");
        cmd->callback([&, n] {
            rc = run_gerstenhaber(*n, parse_field(field_str), seed, emit_tuple, out);
        });
    }
    {
        auto* cmd = add_common(app.add_subcommand("basili", "pair generating an algebra of dim n"));
        auto type = std::make_shared<std::string>();
        cmd->add_option("--type", *type, "partition, e.g. 3,2,1")->required();
        cmd->callback([&, type] {
            rc = run_basili(parse_partition(*type), parse_field(field_str), seed, out);
        });
    }
    {
        auto* cmd = add_common(app.add_subcommand("centralizer", "centralizer dimensions of a Jordan type"));
        auto type = std::make_shared<std::string>();
        cmd->add_option("--type", *type, "partition, e.g. 3,2,1")->required();
        cmd->callback([&, type] {
            rc = run_centralizer(parse_partition(*type), parse_field(field_str), seed, out);
        });
    }
    {
        auto* cmd = add_common(app.add_subcommand("algebra-dim", "dim of the algebra generated by a tuple"), false);
        auto in = std::make_shared<std::string>();
        cmd->add_option("--in", *in, "tuple JSON file")->required();
        cmd->callback([&, in] { rc = run_algebra_dim(*in, seed, out); });
    }
    {
        auto* cmd = add_common(app.add_subcommand("n2red", "reducibility evidence for the pair variety over J(3,2,1)"));
        auto trials = std::make_shared<std::uint64_t>(100);
        cmd->add_option("--trials", *trials, "sample count");
        cmd->callback([&, trials] {
            rc = finish(nc::n2red_certificate(parse_field(field_str), seed, *trials), out);
        });
    }
    {
        auto* cmd = app.add_subcommand("prop321", "triple extensions over type (3,2,1)");
        auto case_name = std::make_shared<std::string>();
        auto fiber_p = std::make_shared<std::uint64_t>(0);
        auto beta = std::make_shared<std::string>("1");
        auto omega = std::make_shared<std::string>();
        auto* copt = cmd->add_option("--case", *case_name, "generic, char2 or char3");
        auto* fopt = cmd->add_option("--fiber", *fiber_p, "brute-force the solution set over F_p");
        copt->excludes(fopt);
        fopt->excludes(copt);
        auto* field_opt = cmd->add_option("--field", field_str, "field: q or fp:<p>");
        cmd->add_option("--beta", *beta, "free parameter, default 1");
        auto* oopt = cmd->add_option("--omega", *omega, "root of w(27w^3-8), generic case only");
        cmd->add_option("--seed", seed, "rng seed");
        cmd->add_option("--out", out, "write certificate here instead of stdout");
        cmd->callback([&, case_name, fiber_p, beta, omega, field_opt, oopt, copt, fopt] {
            if (fopt->count() > 0) {
                rc = run_prop321_fiber(*fiber_p, seed, out);
                return;
            }
            if (copt->count() == 0)
                throw nc::SchemaError("prop321", "needs --case or --fiber");
            FieldSpec f = FieldSpec::rationals();
            if (field_opt->count() > 0)
                f = parse_field(field_str);
            else if (*case_name == "char2")
                f = FieldSpec::prime_field(2);
            else if (*case_name == "char3")
                f = FieldSpec::prime_field(3);
            std::optional<std::string> om;
            if (oopt->count() > 0) om = *omega;
            rc = run_prop321_case(*case_name, f, *beta, om, seed, out);
        });
    }
    {
        auto* cmd = add_common(app.add_subcommand("squarezero", "nonzero nilpotent commutant of a square-zero pair"));
        auto l = std::make_shared<std::size_t>(0);
        auto m = std::make_shared<std::size_t>(0);
        auto w_file = std::make_shared<std::string>();
        auto v_file = std::make_shared<std::string>();
        auto* lopt = cmd->add_option("--l", *l, "block size for a random draw");
        auto* mopt = cmd->add_option("--m", *m, "tail width for a random draw");
        auto* wopt = cmd->add_option("--w", *w_file, "explicit W matrix JSON (l x l)");
        auto* vopt = cmd->add_option("--v", *v_file, "explicit V matrix JSON (l x m)");
        lopt->needs(mopt);
        wopt->needs(vopt);
        lopt->excludes(wopt);
        cmd->callback([&, l, m, w_file, v_file, wopt] {
            Matrix w(FieldSpec::rationals(), 0, 0), v(FieldSpec::rationals(), 0, 0);
            if (wopt->count() > 0) {
                w = nc::matrix_of_json(read_json_file(*w_file), *w_file);
                v = nc::matrix_of_json(read_json_file(*v_file), *v_file);
            } else {
                if (*l == 0 || *m == 0)
                    throw nc::SchemaError("squarezero", "needs --l/--m or --w/--v");
                FieldSpec f = parse_field(field_str);
                Rng rng(seed);
                w = random_matrix(rng, f, *l, *l);
                if (*m == 1) {
                    // the m=1 branch needs rank [E F] < l; force it by drawing
                    // E of deficient rank and F inside its column span
                    Matrix g = random_matrix(rng, f, *l, *l - 1);
                    Matrix h = random_matrix(rng, f, *l - 1, *l);
                    w = g * h;
                    v = w * random_matrix(rng, f, *l, 1);
                } else {
                    v = random_matrix(rng, f, *l, *m);
                }
            }
            rc = run_squarezero(w, v, seed, out);
        });
    }
    {
        auto* cmd = add_common(app.add_subcommand("prop1nonzero", "square-zero perturbation pair for the rank-one family"));
        auto k = std::make_shared<std::size_t>(0);
        auto n = std::make_shared<std::size_t>(0);
        auto s = std::make_shared<std::string>("1");
        auto t = std::make_shared<std::string>("1");
        auto trials = std::make_shared<std::uint64_t>(10);
        cmd->add_option("--k", *k, "leading Jordan block size")->required();
        cmd->add_option("--n", *n, "matrix size")->required();
        cmd->add_option("--s", *s, "nonzero parameter, beta = s^2");
        cmd->add_option("--t", *t, "nonzero parameter, gamma = t^2");
        cmd->add_option("--trials", *trials, "random lambda validations");
        cmd->callback([&, k, n, s, t, trials] {
            rc = run_prop1nonzero(*k, *n, *s, *t, parse_field(field_str), *trials, seed, out);
        });
    }
    {
        auto* cmd = add_common(app.add_subcommand("curve-verify", "sample a regularization family against its basepoint"));
        auto type = std::make_shared<std::string>();
        auto trials = std::make_shared<std::uint64_t>(20);
        cmd->add_option("--type", *type, "partition of the basepoint")->required();
        cmd->add_option("--trials", *trials, "nonzero parameter samples");
        cmd->callback([&, type, trials] {
            rc = run_curve_verify(parse_partition(*type), parse_field(field_str), *trials, seed,
                                  out);
        });
    }
    {
        auto* cmd = add_common(app.add_subcommand("sample-r1", "seeded point of the 1-regular locus"));
        auto d = std::make_shared<std::size_t>(2);
        auto n = std::make_shared<std::size_t>(0);
        cmd->add_option("--d", *d, "tuple length");
        cmd->add_option("--n", *n, "matrix size")->required();
        cmd->add_option("--emit-tuple", emit_tuple, "also write the tuple JSON here");
        cmd->callback([&, d, n] {
            rc = run_sample_r1(*d, *n, parse_field(field_str), seed, emit_tuple, out);
        });
    }
    {
        auto* cmd = app.add_subcommand("dims", "dimension formula table for all partitions of n");
        auto n = std::make_shared<std::size_t>(0);
        auto d = std::make_shared<std::size_t>(2);
        cmd->add_option("--n", *n, "matrix size")->required();
        cmd->add_option("--d", *d, "tuple length for the closure dimension");
        cmd->add_option("--seed", seed, "rng seed");
        cmd->add_option("--out", out, "write certificate here instead of stdout");
        cmd->callback([&, n, d] { rc = run_dims(*n, *d, seed, out); });
    }
    {
        auto* cmd = app.add_subcommand("certify-reducible", "dimension obstruction for a tuple");
        auto in = std::make_shared<std::string>();
        cmd->add_option("--in", *in, "tuple JSON file")->required();
        cmd->add_option("--out", out, "write certificate here instead of stdout");
        cmd->callback([&, in] { rc = run_certify_reducible(*in, out); });
    }
    {
        auto* cmd = app.add_subcommand("transform", "apply an invertible tuple move");
        auto in = std::make_shared<std::string>();
        auto kind = std::make_shared<std::string>();
        auto q_file = std::make_shared<std::string>();
        cmd->add_option("--in", *in, "tuple JSON file")->required();
        cmd->add_option("--kind", *kind, "conjugate, span, polyshift, transpose or twisted")
            ->required();
        cmd->add_option("--q", *q_file, "intertwiner matrix JSON for twisted");
        cmd->add_option("--seed", seed, "rng seed");
        cmd->add_option("--emit-tuple", emit_tuple, "also write the result tuple JSON here");
        cmd->add_option("--out", out, "write certificate here instead of stdout");
        cmd->callback([&, in, kind, q_file] {
            rc = run_transform(*in, *kind, seed, *q_file, emit_tuple, out);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const nc::Error& e) {
        std::cerr << "error: " << error_name(e) << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << error_name(e) << ": " << e.what() << "\n";
        return 2;
    }
    return rc;
}

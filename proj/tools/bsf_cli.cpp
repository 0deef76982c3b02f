// Command-line front end: JSON in, JSON out, explicit seeds everywhere.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bsf/congruence.hpp"
#include "bsf/json_io.hpp"
#include "bsf/minbases.hpp"
#include "bsf/randomgen.hpp"
#include "bsf/suite.hpp"
#include "bsf/verify.hpp"

using namespace bsf;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw UsageError("cannot parse " + path + ": " + e.what());
    }
    return j;
}

MatrixPolynomial<Rat> load_rat_poly(const std::string& path) {
    json j = load_json(path);
    if (!poly_json_is_rational(j))
        throw UsageError("this subcommand needs a rational-field polynomial");
    return poly_from_json<Rat>(j);
}

BlockPencil<Rat> load_rat_pencil(const std::string& path) {
    return pencil_from_json<Rat>(load_json(path));
}

// "(5,6,3:4)" style with optional colon ranges; ranges may run in either
// direction and entries may be negative.
IndexTuple parse_tuple(std::string s) {
    IndexTuple t;
    std::erase_if(s, [](char c) { return c == '(' || c == ')' || std::isspace(c); });
    if (s.empty()) return t;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':', 1);  // allow a leading minus sign
        try {
            if (colon == std::string::npos) {
                t.push_back(std::stoi(item));
            } else {
                int a = std::stoi(item.substr(0, colon));
                int b = std::stoi(item.substr(colon + 1));
                if (a <= b)
                    for (int x = a; x <= b; ++x) t.push_back(x);
                else
                    for (int x = a; x >= b; --x) t.push_back(x);
            }
        } catch (const std::exception&) {
            throw UsageError("cannot parse tuple item '" + item + "'");
        }
    }
    return t;
}

MatrixAssignment<Rat> load_assignment(const std::string& path, int n) {
    json j = load_json(path);
    const json& arr = j.is_object() && j.contains("mats") ? j["mats"] : j;
    if (!arr.is_array()) throw UsageError("assignment file must hold an array of matrices");
    MatrixAssignment<Rat> z;
    for (const auto& m : arr) {
        Matrix<Rat> mat = matrix_from_json<Rat>(m);
        if (mat.rows() != n || mat.cols() != n)
            throw UsageError("assignment matrix is not n x n");
        z.mats.push_back(std::move(mat));
    }
    return z;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string classify_half(const Matrix<Rat>& m, const MatrixPolynomial<Rat>* p,
                          const std::string& lambda_prefix) {
    int n = m.rows();
    if (m.is_zero()) return "";
    if (m == Matrix<Rat>::identity(n)) return lambda_prefix + "I";
    if (m == -Matrix<Rat>::identity(n)) return "-" + lambda_prefix + "I";
    if (p) {
        for (int i = 0; i <= p->grade(); ++i) {
            if (m == p->coeff(i)) return lambda_prefix + "A" + std::to_string(i);
            if (m == -p->coeff(i)) return "-" + lambda_prefix + "A" + std::to_string(i);
        }
    }
    return lambda_prefix.empty() ? "*" : lambda_prefix + "*";
}

void print_pencil_grid(const BlockPencil<Rat>& l, const MatrixPolynomial<Rat>* p) {
    std::vector<std::vector<std::string>> cells(size_t(l.block_rows()));
    size_t width = 1;
    for (int i = 0; i < l.block_rows(); ++i)
        for (int j = 0; j < l.block_cols(); ++j) {
            std::string lam = classify_half(l.block_lambda(i, j), p, "lambda ");
            std::string cst = classify_half(l.block_const(i, j), p, "");
            std::string cell;
            if (lam.empty() && cst.empty())
                cell = "0";
            else if (lam.empty())
                cell = cst;
            else if (cst.empty())
                cell = lam;
            else
                cell = lam + (cst[0] == '-' ? "" : "+") + cst;
            cells[size_t(i)].push_back(cell);
            width = std::max(width, cell.size());
        }
    for (const auto& row : cells) {
        std::cout << "[ ";
        for (const auto& cell : row) {
            std::cout << cell;
            for (size_t pad = cell.size(); pad < width + 2; ++pad) std::cout << ' ';
        }
        std::cout << "]\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"block-symmetric Fiedler-like linearizations of matrix polynomials"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    // poly inspect
    auto* poly_cmd = app.add_subcommand("poly", "matrix polynomial utilities");
    auto* poly_inspect = poly_cmd->add_subcommand("inspect", "report n, k, degree, symmetry");
    std::string poly_file;
    poly_inspect->add_option("file", poly_file, "polynomial JSON")->required();

    // pencil print
    auto* pencil_cmd = app.add_subcommand("pencil", "block pencil utilities");
    auto* pencil_print = pencil_cmd->add_subcommand("print", "render the symbolic block grid");
    std::string pencil_file, pencil_poly_file;
    pencil_print->add_option("file", pencil_file, "pencil JSON")->required();
    pencil_print->add_option("--poly", pencil_poly_file, "label blocks against P's coefficients");

    // tuple csf / sip / heads
    auto* tuple_cmd = app.add_subcommand("tuple", "index tuple calculus");
    std::string tuple_arg;
    auto* tuple_csf = tuple_cmd->add_subcommand("csf", "column standard form");
    tuple_csf->add_option("tuple", tuple_arg, "e.g. \"(5,6,3,4,1,2,0,5,3,1)\"")->required();
    auto* tuple_sip = tuple_cmd->add_subcommand("sip", "successor infix property");
    tuple_sip->add_option("tuple", tuple_arg)->required();
    auto* tuple_heads = tuple_cmd->add_subcommand("heads", "string ends of the csf");
    tuple_heads->add_option("tuple", tuple_arg)->required();

    // gfpr build
    auto* gfpr_cmd = app.add_subcommand("gfpr", "block-symmetric GFPR construction");
    auto* gfpr_build = gfpr_cmd->add_subcommand("build", "build_gfpr from a recipe");
    std::string gfpr_poly, tw_arg = "()", tv_arg = "()", zw_file, zv_file;
    int gfpr_h = 0;
    gfpr_build->add_option("--poly", gfpr_poly, "polynomial JSON")->required();
    gfpr_build->add_option("--h", gfpr_h, "parameter h in 0..k-1")->required();
    gfpr_build->add_option("--tw", tw_arg, "t_w tuple over 0..h-1");
    gfpr_build->add_option("--tv", tv_arg,
                           "t_v tuple (negative range; nonnegative input is shifted by -k)");
    gfpr_build->add_option("--zw", zw_file, "matrix assignment for t_w (defaults to identities)");
    gfpr_build->add_option("--zv", zv_file, "matrix assignment for t_v (defaults to identities)");

    // gfp t
    auto* gfp_cmd = app.add_subcommand("gfp", "block-symmetric generalized Fiedler pencil");
    auto* gfp_t = gfp_cmd->add_subcommand("t", "the tridiagonal-like template");
    std::string gfp_poly;
    gfp_t->add_option("--poly", gfp_poly, "polynomial JSON")->required();

    // family
    auto* family_cmd = app.add_subcommand("family", "the four block-structure families");
    auto* family_skel = family_cmd->add_subcommand("skeleton", "zero-parameter generator");
    std::string family_tag, family_poly, family_form_file, family_pencil_file;
    family_skel->add_option("--tag", family_tag, "O1|O2|E1|E2")->required();
    family_skel->add_option("--poly", family_poly)->required();
    auto* family_build = family_cmd->add_subcommand("build", "instantiate a family member");
    family_build->add_option("--form", family_form_file, "family form JSON")->required();
    family_build->add_option("--poly", family_poly)->required();
    auto* family_as = family_cmd->add_subcommand("check-as", "antidiagonal sum condition");
    family_as->add_option("--pencil", family_pencil_file, "body pencil JSON")->required();
    family_as->add_option("--poly", family_poly)->required();

    // minbases
    auto* minbases_cmd = app.add_subcommand("minbases", "minimal bases and recovery");
    auto* minbases_check = minbases_cmd->add_subcommand("check", "minimal basis test");
    std::string minbases_pencil;
    minbases_check->add_option("--pencil", minbases_pencil, "pencil JSON")->required();
    auto* minbases_recover =
        minbases_cmd->add_subcommand("recover", "N2 M N1^T from the 3.1 partition");
    int rec_s1 = 0, rec_s2 = 0;
    minbases_recover->add_option("--pencil", minbases_pencil)->required();
    minbases_recover->add_option("--s1", rec_s1, "grade of the right dual Lambda_{s1}")
        ->required();
    minbases_recover->add_option("--s2", rec_s2, "grade of the left dual Lambda_{s2}")
        ->required();

    // congruence
    auto* congr_cmd = app.add_subcommand("congruence", "reduction to the four families");
    auto* congr_reduce = congr_cmd->add_subcommand("reduce", "constructive certified reduction");
    std::string congr_poly, congr_pencil;
    int congr_h = 0;
    congr_reduce->add_option("--poly", congr_poly)->required();
    congr_reduce->add_option("--h", congr_h)->required();
    congr_reduce->add_option("--tw", tw_arg);
    congr_reduce->add_option("--tv", tv_arg);
    congr_reduce->add_option("--zw", zw_file);
    congr_reduce->add_option("--zv", zv_file);
    auto* congr_oracle = congr_cmd->add_subcommand("oracle", "brute-force enumeration, k <= 8");
    congr_oracle->add_option("--pencil", congr_pencil)->required();
    congr_oracle->add_option("--poly", congr_poly)->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "spectral verification");
    auto* verify_lin = verify_cmd->add_subcommand("linearize", "match against the companion");
    std::string verify_pencil, verify_poly;
    double tol = 1e-8;
    verify_lin->add_option("--pencil", verify_pencil)->required();
    verify_lin->add_option("--poly", verify_poly)->required();
    verify_lin->add_option("--tol", tol, "chordal tolerance (default 1e-8)");

    // suite
    auto* suite_cmd = app.add_subcommand("suite", "run the acceptance battery");
    unsigned long seed = 42;
    double suite_tol = 1e-8;
    suite_cmd->add_option("--seed", seed, "PRNG seed (default 42)");
    suite_cmd->add_option("--tol", suite_tol, "spectral tolerance (default 1e-8)");

    app.parse(argc, argv);

    auto make_spec = [&](const MatrixPolynomial<Rat>& p, int h) {
        int k = p.grade(), n = p.n();
        IndexTuple tw = parse_tuple(tw_arg);
        IndexTuple tv = parse_tuple(tv_arg);
        auto conv = (!tv.empty() && all_nonnegative(tv)) ? GfprSpec<Rat>::TvConvention::Shifted
                                                         : GfprSpec<Rat>::TvConvention::Negative;
        MatrixAssignment<Rat> zw, zv;
        if (!zw_file.empty())
            zw = load_assignment(zw_file, n);
        else
            zw.mats.assign(tw.size(), Matrix<Rat>::identity(n));
        if (!zv_file.empty())
            zv = load_assignment(zv_file, n);
        else
            zv.mats.assign(tv.size(), Matrix<Rat>::identity(n));
        return GfprSpec<Rat>(k, h, tw, tv, zw, zv, conv);
    };

    if (poly_inspect->parsed()) {
        json j = load_json(poly_file);
        json out;
        if (poly_json_is_rational(j)) {
            auto p = poly_from_json<Rat>(j);
            out = {{"n", p.n()},
                   {"k", p.grade()},
                   {"degree", p.degree()},
                   {"field", "rational"},
                   {"symmetric", p.is_symmetric()},
                   {"hermitian", nullptr}};
        } else {
            auto p = poly_from_json<Cplx>(j);
            out = {{"n", p.n()},
                   {"k", p.grade()},
                   {"degree", p.degree()},
                   {"field", "complex"},
                   {"symmetric", p.is_symmetric()},
                   {"hermitian", p.is_hermitian()}};
        }
        if (as_json)
            emit(out);
        else
            std::cout << "n = " << out["n"] << ", grade = " << out["k"] << ", degree = "
                      << out["degree"] << ", field = " << out["field"].get<std::string>()
                      << ", symmetric = " << (out["symmetric"].get<bool>() ? "yes" : "no")
                      << ", hermitian = "
                      << (out["hermitian"].is_null()
                              ? "n/a"
                              : (out["hermitian"].get<bool>() ? "yes" : "no"))
                      << '\n';
        return 0;
    }
    if (pencil_print->parsed()) {
        BlockPencil<Rat> l = load_rat_pencil(pencil_file);
        std::optional<MatrixPolynomial<Rat>> p;
        if (!pencil_poly_file.empty()) p = load_rat_poly(pencil_poly_file);
        print_pencil_grid(l, p ? &*p : nullptr);
        return 0;
    }
    if (tuple_csf->parsed()) {
        IndexTuple t = parse_tuple(tuple_arg);
        IndexTuple c = csf(t);
        if (as_json)
            emit(json{{"input", t}, {"csf", c}, {"pretty", tuple_to_string(c)}});
        else
            std::cout << tuple_to_string(c) << '\n';
        return 0;
    }
    if (tuple_sip->parsed()) {
        bool ok = satisfies_sip(parse_tuple(tuple_arg));
        if (as_json)
            emit(json{{"sip", ok}});
        else
            std::cout << (ok ? "satisfies the SIP" : "violates the SIP") << '\n';
        return ok ? 0 : 1;
    }
    if (tuple_heads->parsed()) {
        auto hs = heads(parse_tuple(tuple_arg));
        json out = json::array();
        for (int h : hs) out.push_back(h);
        if (as_json)
            emit(json{{"heads", out}});
        else {
            std::cout << "{";
            bool first = true;
            for (int h : hs) {
                std::cout << (first ? "" : ", ") << h;
                first = false;
            }
            std::cout << "}\n";
        }
        return 0;
    }
    if (gfpr_build->parsed()) {
        auto p = load_rat_poly(gfpr_poly);
        auto spec = make_spec(p, gfpr_h);
        emit(pencil_to_json(build_gfpr(p, spec)));
        return 0;
    }
    if (gfp_t->parsed()) {
        auto p = load_rat_poly(gfp_poly);
        emit(pencil_to_json(gfp_pencil(p)));
        return 0;
    }
    if (family_skel->parsed()) {
        auto p = load_rat_poly(family_poly);
        emit(pencil_to_json(skeleton(p, tag_from_string(family_tag))));
        return 0;
    }
    if (family_build->parsed()) {
        auto p = load_rat_poly(family_poly);
        auto form = form_from_json<Rat>(load_json(family_form_file));
        emit(pencil_to_json(build_family(p, form)));
        return 0;
    }
    if (family_as->parsed()) {
        auto p = load_rat_poly(family_poly);
        auto m = load_rat_pencil(family_pencil_file);
        auto rep = as_condition(m, p);
        json out{{"holds", rep.holds}, {"violated", rep.violated}};
        if (as_json)
            emit(out);
        else if (rep.holds)
            std::cout << "AS condition holds\n";
        else {
            std::cout << "AS condition violated at s =";
            for (int s : rep.violated) std::cout << ' ' << s;
            std::cout << '\n';
        }
        return rep.holds ? 0 : 1;
    }
    if (minbases_check->parsed()) {
        auto g = load_rat_pencil(minbases_pencil);
        auto rep = is_minimal_basis(g.as_polynomial(), seed);
        json out{{"minimal", rep.is_minimal},
                 {"highest_degree_full_rank", rep.highest_degree_full_rank},
                 {"full_rank_at_samples", rep.full_rank_at_samples},
                 {"samples", rep.samples},
                 {"row_degrees", rep.row_degrees}};
        if (as_json)
            emit(out);
        else
            std::cout << (rep.is_minimal ? "minimal basis" : "not a minimal basis")
                      << " (sampled at " << rep.samples << " points)\n";
        return rep.is_minimal ? 0 : 1;
    }
    if (minbases_recover->parsed()) {
        auto c = load_rat_pencil(minbases_pencil);
        int n = c.n();
        auto q = recover_Q(c, rec_s2 + 1, rec_s1 + 1, make_Lambda<Rat>(rec_s1, n),
                           make_Lambda<Rat>(rec_s2, n));
        emit(poly_to_json(q));
        return 0;
    }
    if (congr_reduce->parsed()) {
        auto p = load_rat_poly(congr_poly);
        auto spec = make_spec(p, congr_h);
        auto cert = main_permutation(p, spec);
        emit(certificate_to_json(cert));
        return 0;
    }
    if (congr_oracle->parsed()) {
        auto p = load_rat_poly(congr_poly);
        auto l = load_rat_pencil(congr_pencil);
        auto cert = brute_force_oracle(l, p);
        if (!cert) {
            if (as_json)
                emit(json{{"found", false}});
            else
                std::cout << "no block permutation carries the pencil into a family\n";
            return 1;
        }
        emit(certificate_to_json(*cert));
        return 0;
    }
    if (verify_lin->parsed()) {
        auto p = load_rat_poly(verify_poly);
        auto l = load_rat_pencil(verify_pencil);
        auto rep = check_strong_linearization(l, p, tol);
        json out{{"pass", rep.pass},
                 {"max_chordal_distance", rep.max_matched_distance},
                 {"finite", {rep.finite_left, rep.finite_right}},
                 {"infinite", {rep.infinite_left, rep.infinite_right}},
                 {"degenerate", {rep.degenerate_left, rep.degenerate_right}},
                 {"tol", tol}};
        if (as_json)
            emit(out);
        else
            std::cout << (rep.pass ? "PASS" : "FAIL") << ": max chordal distance "
                      << rep.max_matched_distance << " against tolerance " << tol << '\n';
        return rep.pass ? 0 : 1;
    }
    if (suite_cmd->parsed()) {
        SuiteReport report = run_acceptance_suite(seed, suite_tol);
        if (as_json) {
            json out{{"seed", report.seed}, {"tol", report.tol}, {"all_pass", report.all_pass}};
            json items = json::array();
            for (const auto& r : report.results)
                items.push_back(json{{"id", r.id},
                                     {"name", r.name},
                                     {"pass", r.pass},
                                     {"seconds", r.seconds},
                                     {"details", r.details}});
            out["criteria"] = items;
            emit(out);
        } else {
            for (const auto& r : report.results)
                std::printf("[%s] criterion %d: %s (%.2fs) -- %s\n", r.pass ? "PASS" : "FAIL",
                            r.id, r.name.c_str(), r.seconds, r.details.c_str());
            std::printf("%s\n", report.all_pass ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
        }
        return report.all_pass ? 0 : 1;
    }
    throw UsageError("no subcommand selected");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        CLI::App dummy;
        int code = dummy.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

// Command-line front door for the skewcodes library.
//
// Exit codes: 0 success, 1 usage or malformed input text, 2 domain error
// (impossible object, uncorrectable word, failed replication), 3 budget
// exceeded.  Output is deterministic and line-oriented; --json emits the
// same data as a JSON object.  Budgets resolve as --budget, then the
// SKEWCODES_BUDGET environment variable, then the per-operation default.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewcodes/codec.hpp"
#include "skewcodes/construct.hpp"
#include "skewcodes/duals.hpp"
#include "skewcodes/embed.hpp"
#include "skewcodes/formats.hpp"

using namespace skewcodes;
using nlohmann::json;

namespace {

struct Common {
    bool json = false;
    std::optional<std::uint64_t> budget;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_flag("--json", c.json, "emit the same data as JSON");
    cmd->add_option("--budget", c.budget,
                    "enumeration budget (overrides SKEWCODES_BUDGET)");
}

std::uint64_t budget_or(const Common& c, std::uint64_t fallback) {
    if (c.budget) return *c.budget;
    if (const char* env = std::getenv("SKEWCODES_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw DomainError(std::string("SKEWCODES_BUDGET is not a number: '") + env + "'");
        }
    }
    return fallback;
}

struct FieldArgs {
    std::string field;
    long long t = 0;
};

void add_field(CLI::App* cmd, FieldArgs& fa) {
    cmd->add_option("--field", fa.field, "field spec, e.g. p=2,s=2,mod=x^2+x+1,gen=a")
        ->required();
    cmd->add_option("--t", fa.t, "automorphism exponent: theta(a) = a^(p^t), default 0");
}

Automorphism make_theta(const FieldArgs& fa) {
    return Automorphism(parse_field_spec(fa.field), fa.t);
}

std::string read_text(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw DomainError("cannot open '" + path + "'");
        ss << in.rdbuf();
    }
    return ss.str();
}

void emit(const Common& c, const json& j, const std::string& text) {
    if (c.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::vector<SkewPoly> moduli(const ProductTCode& code) {
    std::vector<SkewPoly> fs;
    for (const ModuleThetaCode& comp : code.components()) fs.push_back(comp.f());
    return fs;
}

RowVec flatten(const Message& blocks) {
    RowVec out;
    for (const RowVec& b : blocks) out.insert(out.end(), b.begin(), b.end());
    return out;
}

// ---- replicate: the pinned worked-instance suite ----

struct CheckRow {
    std::string name;
    bool pass;
};

void run_replicate_suite(std::vector<CheckRow>& rows) {
    FieldPtr F = Field::make(2, 2);
    Automorphism th(F, 1);
    auto poly = [&](const std::string& s) { return parse_poly(th, s); };
    auto mat = [&](const std::string& s) { return parse_matrix(F, s); };
    auto check = [&](const std::string& name, bool ok) { rows.push_back({name, ok}); };

    {
        SkewPoly f = poly("x^3 + a*x + 1");
        PeriodData pd = period(f);
        bool ok = pd.m == 8 && pd.q_f == poly("x^5 + (a+1)*x^3 + x^2 + a*x + 1");
        check("cubic with period 8: multiplier x^5+(a+1)*x^3+x^2+a*x+1", ok);

        SkewPoly x21 = SkewPoly::monomial(th, F->one(), 21) - SkewPoly::one(th);
        QuotRem qr = left_quotrem(x21, f);
        check("matrix order 21 exceeds the period; x^21-1 leaves remainder x^2+(a+1)*x+a",
              matrix_order(companion(f)) == 21 && qr.rem == poly("x^2 + (a+1)*x + a"));
    }
    {
        bool ok = period(poly("x^5 + x^3 + x^2 + 1")).m == 12 &&
                  period(poly("x^5 + x^2 + 1")).m == 31;
        check("degree-5 binary-coefficient periods 12 and 31", ok);
    }
    {
        std::vector<std::string> fs = {
            "x^3 + x^2 + 1",
            "x^3 + (a+1)*x^2 + (a+1)*x + a",
            "x^3 + x^2 + a*x + a+1",
            "x^3 + a+1",
        };
        std::vector<std::size_t> ms = {7, 6, 6, 6};
        std::vector<std::string> qs = {
            "x^4 + x^3 + x^2 + 1",
            "x^3 + a*x^2 + (a+1)*x + a+1",
            "x^3 + x^2 + a*x + a",
            "x^3 + a",
        };
        std::vector<std::string> Qs = {
            "1,0,1,1,1,0,0; 0,1,0,1,1,1,0; 0,0,1,0,1,1,1",
            "a+1,a+1,a,1,0,0; 0,a,a,a+1,1,0; 0,0,a+1,a+1,a,1",
            "a,a,1,1,0,0; 0,a+1,a+1,1,1,0; 0,0,a,a,1,1",
            "a,0,0,1,0,0; 0,a+1,0,0,1,0; 0,0,a,0,0,1",
        };
        std::vector<std::string> Bs = {
            "0,0,0; 0,0,0; 0,0,0",
            "a,1,a; 1,a+1,1; a,1,a",
            "0,a+1,0; a+1,0,a; 0,a,0",
            "a,0,0; 0,a+1,0; 0,0,a",
        };
        for (int i = 0; i < 4; ++i) {
            PeriodData pd = period(poly(fs[i]));
            EmbeddingData ed = embedding({poly(fs[i])});
            bool ok = pd.m == ms[i] && pd.q_f == poly(qs[i]) &&
                      q_matrix(pd) == mat(Qs[i]) && ed.B == mat(Bs[i]) &&
                      ed.rank_B == static_cast<std::size_t>(i);
            check("showcase cubic " + std::to_string(i) + ": period " +
                      std::to_string(ms[i]) + ", pinned multiplier, Q and B, rank " +
                      std::to_string(i),
                  ok);
        }
    }
    {
        SkewPoly f2 = poly("x^3 + x^2 + a*x + a+1");
        EmbeddingData ed = embedding({f2});
        SemiLinearMap T(th, companion(f2));
        Matrix KerB = left_kernel(ed.B);
        bool kernel_ok =
            KerB.rows() == 1 &&
            LinearCode(KerB) == LinearCode(Matrix::from_rows(F, {parse_row(F, "a+1,0,1")}, 3));

        Matrix Cg = mat("0,1,0; 0,0,1");
        LinearCode sum(Cg.vstack(KerB));
        LinearCode Cs = quasi_euclidean_dual(LinearCode(Cg), ed);
        ModuleThetaCode expected(f2, poly("x^2 + a+1"));
        bool dual_ok = !is_invariant(T, Cg) && sum.k() == 3 &&
                       is_invariant(T, Cs.generators()) &&
                       Cs == LinearCode(expected.generator_matrix());
        check("rank-2 form: kernel spans (a+1,0,1); the form dual of <e2,e3> is the "
              "module code of x^2+a+1",
              kernel_ok && dual_ok);

        ProductTCode code({ModuleThetaCode(f2, poly("x + a+1"))}, Matrix::identity(F, 3));
        ProductTCode dual = quasi_dual_generator(code, ed);
        check("dual generator recovered from the reversed cofactor is x^2+a+1",
              dual.component(0).g() == poly("x^2 + a+1"));
    }
    {
        Matrix E = mat("0,1,0; 0,0,1; 1,0,0");
        SemiLinearMap TE(th, E);
        SemiLinearMap TD(th, Matrix::block_diag({E, E}));
        RowVec ones = parse_row(F, "1,1,1,1,1,1");
        Matrix C = Matrix::from_rows(F, {ones}, 6);
        bool invariant = is_invariant(TD, C) &&
                         is_invariant(TD, Matrix::from_rows(F, {parse_row(F, "1,1,1,0,0,0")}, 6));

        // no product of invariant blocks matches the diagonal line: every
        // 1-dimensional product leaves one block identically zero
        bool separable = false;
        std::size_t invariant_lines = 0;
        for (Field::Rep lead = 0; lead < 3 && !separable; ++lead) {
            // projective representatives with first nonzero coordinate 1
            std::size_t free = 2 - lead;
            for (std::uint64_t count = 0; count < (std::uint64_t)1 << (2 * free); ++count) {
                RowVec v(3, 0);
                v[lead] = 1;
                std::uint64_t c = count;
                for (std::size_t j = lead + 1; j < 3; ++j, c >>= 2)
                    v[j] = static_cast<Field::Rep>(c & 3);
                if (!is_invariant(TE, Matrix::from_rows(F, {v}, 3))) continue;
                ++invariant_lines;
                RowVec low(6, 0), high(6, 0);
                for (std::size_t j = 0; j < 3; ++j) {
                    low[j] = v[j];
                    high[j + 3] = v[j];
                }
                if (LinearCode(Matrix::from_rows(F, {low}, 6)) == LinearCode(C) ||
                    LinearCode(Matrix::from_rows(F, {high}, 6)) == LinearCode(C))
                    separable = true;
            }
        }
        check("the diagonal line in F_4^6 is invariant but is no product of per-block "
              "invariant lines",
              invariant && invariant_lines > 0 && !separable);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact arithmetic for codes over F_q invariant under semi-linear "
        "transformations"};
    app.require_subcommand(1);
    int rc = 0;

    // period
    struct {
        Common c;
        FieldArgs fa;
        std::string poly;
    } per;
    {
        auto* cmd = app.add_subcommand("period",
                                       "least m with x^m - 1 a left multiple of the "
                                       "polynomial, plus the multiplier");
        add_field(cmd, per.fa);
        cmd->add_option("--poly", per.poly, "skew polynomial, e.g. 'x^3+a*x+1'")->required();
        add_common(cmd, per.c);
        cmd->callback([&] {
            Automorphism th = make_theta(per.fa);
            PeriodData pd = period(parse_poly(th, per.poly));
            std::ostringstream out;
            out << "m=" << pd.m << "\n";
            out << "q_f=" << poly_text(pd.q_f) << "\n";
            emit(per.c, json{{"m", pd.m}, {"q_f", poly_text(pd.q_f)}}, out.str());
        });
    }

    // qmatrix
    struct {
        Common c;
        FieldArgs fa;
        std::string poly;
    } qm;
    {
        auto* cmd = app.add_subcommand("qmatrix",
                                       "matrix whose rows carry the twisted shifts of "
                                       "the period multiplier");
        add_field(cmd, qm.fa);
        cmd->add_option("--poly", qm.poly, "skew polynomial")->required();
        add_common(cmd, qm.c);
        cmd->callback([&] {
            Automorphism th = make_theta(qm.fa);
            PeriodData pd = period(parse_poly(th, qm.poly));
            Matrix Q = q_matrix(pd);
            std::ostringstream out;
            out << "m=" << pd.m << "\n";
            out << "Q=" << matrix_text(Q) << "\n";
            emit(qm.c, json{{"m", pd.m}, {"Q", matrix_text(Q)}}, out.str());
        });
    }

    // bmatrix
    struct {
        Common c;
        FieldArgs fa;
        std::vector<std::string> polys;
        std::string conj;
    } bm;
    {
        auto* cmd = app.add_subcommand("bmatrix",
                                       "bilinear form matrix of the embedding built "
                                       "from one modulus per component");
        add_field(cmd, bm.fa);
        cmd->add_option("--poly", bm.polys, "component modulus (repeatable)")->required();
        cmd->add_option("--conj", bm.conj, "coordinate-change matrix, identity if omitted");
        add_common(cmd, bm.c);
        cmd->callback([&] {
            Automorphism th = make_theta(bm.fa);
            std::vector<SkewPoly> fs;
            for (const std::string& s : bm.polys) fs.push_back(parse_poly(th, s));
            EmbeddingData ed = bm.conj.empty()
                                   ? embedding(fs)
                                   : embedding(fs, parse_matrix(th.field(), bm.conj));
            std::ostringstream out;
            json jper = json::array();
            out << "periods=";
            for (std::size_t i = 0; i < ed.periods.size(); ++i) {
                out << (i ? "," : "") << ed.periods[i].m;
                jper.push_back(ed.periods[i].m);
            }
            out << "\nm=" << ed.m() << "\n";
            out << "B=" << matrix_text(ed.B) << "\n";
            out << "rank=" << ed.rank_B << "\n";
            emit(bm.c,
                 json{{"periods", jper},
                      {"m", ed.m()},
                      {"B", matrix_text(ed.B)},
                      {"rank", ed.rank_B}},
                 out.str());
        });
    }

    // divisors
    struct {
        Common c;
        FieldArgs fa;
        std::string poly;
        unsigned degree = 0;
        bool all_const = false;
    } dv;
    {
        auto* cmd = app.add_subcommand("divisors",
                                       "monic right divisors of a given degree with "
                                       "their quotients");
        add_field(cmd, dv.fa);
        cmd->add_option("--poly", dv.poly, "skew polynomial to factor")->required();
        cmd->add_option("--degree", dv.degree, "divisor degree")->required();
        cmd->add_flag("--all-const", dv.all_const,
                      "include divisors with zero constant term");
        add_common(cmd, dv.c);
        cmd->callback([&] {
            Automorphism th = make_theta(dv.fa);
            auto divs = right_divisors(parse_poly(th, dv.poly), dv.degree, dv.all_const,
                                       budget_or(dv.c, (std::uint64_t)1 << 20));
            std::ostringstream out;
            out << "count=" << divs.size() << "\n";
            json jd = json::array();
            for (const auto& [g, q] : divs) {
                out << "g=" << poly_text(g) << "; q=" << poly_text(q) << "\n";
                jd.push_back({{"g", poly_text(g)}, {"q", poly_text(q)}});
            }
            emit(dv.c, json{{"count", divs.size()}, {"divisors", jd}}, out.str());
        });
    }

    // mkcode
    struct {
        Common c;
        std::string path;
    } mk;
    {
        auto* cmd = app.add_subcommand("mkcode",
                                       "read a code descriptor and print dimensions "
                                       "and the generator matrix");
        cmd->add_option("--code", mk.path, "descriptor file, '-' for stdin")->required();
        add_common(cmd, mk.c);
        cmd->callback([&] {
            ProductTCode code = parse_code_descriptor(read_text(mk.path));
            std::ostringstream out;
            out << "n=" << code.n() << "\nk=" << code.k() << "\n";
            out << "components=" << code.component_count() << "\n";
            json jc = json::array();
            for (const ModuleThetaCode& comp : code.components()) {
                out << "component=f=" << poly_text(comp.f()) << "; g=" << poly_text(comp.g())
                    << "; n=" << comp.n() << "; k=" << comp.k() << "\n";
                jc.push_back({{"f", poly_text(comp.f())},
                              {"g", poly_text(comp.g())},
                              {"n", comp.n()},
                              {"k", comp.k()}});
            }
            Matrix G = code.generator_matrix();
            out << "G=" << matrix_text(G) << "\n";
            emit(mk.c,
                 json{{"n", code.n()},
                      {"k", code.k()},
                      {"components", jc},
                      {"G", matrix_text(G)}},
                 out.str());
        });
    }

    // pcheck
    struct {
        Common c;
        std::string path;
    } pc;
    {
        auto* cmd = app.add_subcommand("pcheck",
                                       "standard-form generator and parity-check "
                                       "matrices per component, plus the product one");
        cmd->add_option("--code", pc.path, "descriptor file, '-' for stdin")->required();
        add_common(cmd, pc.c);
        cmd->callback([&] {
            ProductTCode code = parse_code_descriptor(read_text(pc.path));
            std::ostringstream out;
            json jc = json::array();
            std::vector<LinearCode> parts;
            for (std::size_t i = 0; i < code.component_count(); ++i) {
                StandardForm sf = parity_check(code.component(i));
                parts.emplace_back(code.component(i).generator_matrix());
                out << "component=" << i + 1 << "\n";
                out << "S=" << matrix_text(sf.S) << "\n";
                out << "G_std=" << matrix_text(sf.G_std) << "\n";
                out << "H=" << matrix_text(sf.H) << "\n";
                jc.push_back({{"S", matrix_text(sf.S)},
                              {"G_std", matrix_text(sf.G_std)},
                              {"H", matrix_text(sf.H)}});
            }
            Matrix H = euclidean_dual_product(parts, code.conjugator()).generators();
            bool ok = (code.generator_matrix() * H.transpose()).is_zero() &&
                      H.rows() == code.n() - code.k();
            out << "H_product=" << matrix_text(H) << "\n";
            out << "orthogonal=" << (ok ? "true" : "false") << "\n";
            if (!ok) throw Error("parity-check reconstruction failed its own audit");
            emit(pc.c,
                 json{{"components", jc}, {"H_product", matrix_text(H)}, {"orthogonal", ok}},
                 out.str());
        });
    }

    // dual
    struct {
        Common c;
        std::string path;
        std::string kind = "euclidean";
    } du;
    {
        auto* cmd = app.add_subcommand("dual", "dual code under the chosen pairing");
        cmd->add_option("--code", du.path, "descriptor file, '-' for stdin")->required();
        cmd->add_option("--kind", du.kind, "euclidean | quasi | hermitian")
            ->check(CLI::IsMember({"euclidean", "quasi", "hermitian"}));
        add_common(cmd, du.c);
        cmd->callback([&] {
            ProductTCode code = parse_code_descriptor(read_text(du.path));
            LinearCode primal(code.generator_matrix());
            std::ostringstream out;
            json j{{"kind", du.kind}};
            out << "kind=" << du.kind << "\n";
            if (du.kind == "euclidean") {
                LinearCode D = euclidean_dual(primal);
                SemiLinearMap Tp = dual_invariance_map(code.invariance_map());
                bool inv = is_invariant(Tp, D.generators());
                out << "k=" << D.k() << "\n";
                out << "D=" << matrix_text(D.generators()) << "\n";
                out << "invariant_under_companion_map=" << (inv ? "true" : "false") << "\n";
                j["k"] = D.k();
                j["D"] = matrix_text(D.generators());
                j["invariant_under_companion_map"] = inv;
            } else {
                EmbeddingData ed = embedding(moduli(code), code.conjugator());
                if (du.kind == "quasi") {
                    LinearCode D = quasi_euclidean_dual(primal, ed);
                    out << "m=" << ed.m() << "\nrank_B=" << ed.rank_B << "\n";
                    out << "k=" << D.k() << "\n";
                    out << "D=" << matrix_text(D.generators()) << "\n";
                    j["m"] = ed.m();
                    j["rank_B"] = ed.rank_B;
                    j["k"] = D.k();
                    j["D"] = matrix_text(D.generators());
                    try {
                        ProductTCode dual = quasi_dual_generator(code, ed);
                        json jg = json::array();
                        for (const ModuleThetaCode& comp : dual.components()) {
                            out << "g_dual=" << poly_text(comp.g()) << "\n";
                            jg.push_back(poly_text(comp.g()));
                        }
                        j["g_dual"] = jg;
                    } catch (const Error& e) {
                        out << "g_dual=unavailable: " << e.what() << "\n";
                        j["g_dual"] = nullptr;
                    }
                } else {
                    HermitianContext ctx(std::move(ed));
                    ctx.require_valid();
                    LinearCode D = hermitian_dual(code, ctx);
                    bool agree = D == quasi_euclidean_dual(primal, ctx.data());
                    out << "m=" << ctx.data().m() << "\n";
                    out << "k=" << D.k() << "\n";
                    out << "D=" << matrix_text(D.generators()) << "\n";
                    out << "agrees_with_quasi=" << (agree ? "true" : "false") << "\n";
                    j["m"] = ctx.data().m();
                    j["k"] = D.k();
                    j["D"] = matrix_text(D.generators());
                    j["agrees_with_quasi"] = agree;
                }
            }
            emit(du.c, j, out.str());
        });
    }

    // encode
    struct {
        Common c;
        std::string path;
        std::string message;
        std::string method = "poly";
    } en;
    {
        auto* cmd = app.add_subcommand("encode",
                                       "systematic encoding; words live in component "
                                       "coordinates");
        cmd->add_option("--code", en.path, "descriptor file, '-' for stdin")->required();
        cmd->add_option("--message", en.message, "comma-separated message of length k")
            ->required();
        cmd->add_option("--method", en.method, "poly | matrix")
            ->check(CLI::IsMember({"poly", "matrix"}));
        add_common(cmd, en.c);
        cmd->callback([&] {
            ProductTCode code = parse_code_descriptor(read_text(en.path));
            RowVec flat = parse_row(code.field(), en.message);
            if (flat.size() != code.k())
                throw DomainError("message has " + std::to_string(flat.size()) +
                                  " symbols, the code needs " + std::to_string(code.k()));
            Message msg;
            std::size_t off = 0;
            for (const ModuleThetaCode& comp : code.components()) {
                msg.emplace_back(flat.begin() + off, flat.begin() + off + comp.k());
                off += comp.k();
            }
            RowVec cw = encode(msg, code,
                               en.method == "poly" ? EncodeMethod::poly : EncodeMethod::matrix);
            std::ostringstream out;
            out << "codeword=" << row_text(code.field(), cw) << "\n";
            emit(en.c, json{{"codeword", row_text(code.field(), cw)}}, out.str());
        });
    }

    // decode
    struct {
        Common c;
        std::string path;
        std::string word;
        std::string distances;
    } de;
    {
        auto* cmd = app.add_subcommand("decode",
                                       "syndrome decoding of a received word in "
                                       "component coordinates");
        cmd->add_option("--code", de.path, "descriptor file, '-' for stdin")->required();
        cmd->add_option("--word", de.word, "comma-separated received word of length n")
            ->required();
        cmd->add_option("--distances", de.distances,
                        "known component distances, e.g. '4,2' (skips the exhaustive "
                        "distance computation)");
        add_common(cmd, de.c);
        cmd->callback([&] {
            ProductTCode code = parse_code_descriptor(read_text(de.path));
            std::uint64_t budget = budget_or(de.c, SyndromeTable::default_budget);
            std::optional<SyndromeTable> table;
            if (de.distances.empty()) {
                table.emplace(code, budget);
            } else {
                std::vector<std::uint64_t> d;
                std::istringstream in(de.distances);
                std::string tok;
                while (std::getline(in, tok, ',')) {
                    try {
                        d.push_back(std::stoull(tok));
                    } catch (const std::exception&) {
                        throw ParseError("distances must be integers, got '" + tok + "'");
                    }
                }
                table.emplace(code, d, budget);
            }
            RowVec word = parse_row(code.field(), de.word);
            DecodedWord dw = meggitt_decode(word, *table, code);
            RowVec msg = flatten(decode_plain(dw.codeword, code));
            std::size_t weight = 0;
            for (Field::Rep r : dw.error) weight += r != 0;
            std::ostringstream out;
            out << "codeword=" << row_text(code.field(), dw.codeword) << "\n";
            out << "error=" << row_text(code.field(), dw.error) << "\n";
            out << "weight=" << weight << "\n";
            out << "message=" << row_text(code.field(), msg) << "\n";
            emit(de.c,
                 json{{"codeword", row_text(code.field(), dw.codeword)},
                      {"error", row_text(code.field(), dw.error)},
                      {"weight", weight},
                      {"message", row_text(code.field(), msg)}},
                 out.str());
        });
    }

    // distance
    struct {
        Common c;
        std::string path;
    } di;
    {
        auto* cmd = app.add_subcommand("distance", "exact minimum distance by enumeration");
        cmd->add_option("--code", di.path, "descriptor file, '-' for stdin")->required();
        add_common(cmd, di.c);
        cmd->callback([&] {
            ProductTCode code = parse_code_descriptor(read_text(di.path));
            std::uint64_t d = min_distance(LinearCode(code.generator_matrix()),
                                           budget_or(di.c, (std::uint64_t)1 << 20));
            std::ostringstream out;
            out << "d=" << d << "\n";
            emit(di.c, json{{"d", d}}, out.str());
        });
    }

    // dtable
    struct {
        Common c;
        FieldArgs fa;
        std::size_t nmax = 0;
    } dt;
    {
        auto* cmd = app.add_subcommand("dtable",
                                       "best minimum distance over all module codes "
                                       "of each shape, as CSV ('?' = not computed)");
        add_field(cmd, dt.fa);
        cmd->add_option("--nmax", dt.nmax, "largest length to tabulate")->required();
        add_common(cmd, dt.c);
        cmd->callback([&] {
            Automorphism th = make_theta(dt.fa);
            DistanceTable table = distance_table(th.field(), th, dt.nmax,
                                                 budget_or(dt.c, (std::uint64_t)1 << 20));
            std::ostringstream out;
            out << "n\\k";
            for (std::size_t k = 1; k <= dt.nmax; ++k) out << "," << k;
            out << "\n";
            json jc = json::array();
            for (std::size_t n = 1; n <= dt.nmax; ++n) {
                out << n;
                for (std::size_t k = 1; k <= n; ++k) {
                    auto cell = table.at(n, k);
                    out << ",";
                    if (cell)
                        out << *cell;
                    else
                        out << "?";
                    jc.push_back({{"n", n}, {"k", k}, {"d", cell ? json(*cell) : json()}});
                }
                out << "\n";
            }
            emit(dt.c,
                 json{{"q", table.q}, {"t", table.theta_exponent}, {"cells", jc}},
                 out.str());
        });
    }

    // construct
    struct {
        Common c;
        FieldArgs fa;
        std::string matrix;
        std::size_t h = 1;
    } co;
    {
        auto* cmd = app.add_subcommand(
            "construct",
            "scan the determinant zero locus for fixed-subfield seed vectors of "
            "invariant codes (a construction method, not an enumeration of all "
            "invariant codes)");
        cmd->set_help_flag("--help", "print this help message and exit");
        add_field(cmd, co.fa);
        cmd->add_option("--matrix", co.matrix, "square matrix of the semi-linear map")
            ->required();
        cmd->add_option("--h", co.h, "number of twisted powers / projective dimension")
            ->required();
        add_common(cmd, co.c);
        cmd->callback([&] {
            Automorphism th = make_theta(co.fa);
            Matrix A = parse_matrix(th.field(), co.matrix);
            TwistedPowers tp = twisted_powers(A, th, co.h);
            auto points = zero_locus_scan(tp, budget_or(co.c, (std::uint64_t)1 << 20));
            SemiLinearMap T(th, A);
            std::ostringstream out;
            out << "points=" << points.size() << "\n";
            json jp = json::array();
            for (const ZeroLocusPoint& zp : points) {
                out << "point=" << row_text(th.field(), zp.point) << "\n";
                out << "kernel=" << matrix_text(zp.kernel) << "\n";
                out << "fixed=" << matrix_text(zp.fixed_kernel) << "\n";
                json dims = json::array();
                out << "dims=";
                for (std::size_t i = 0; i < zp.fixed_kernel.rows(); ++i) {
                    LinearCode c = code_from_point(T, zp.fixed_kernel.row(i), co.h);
                    out << (i ? "," : "") << c.k();
                    dims.push_back(c.k());
                }
                out << "\n";
                jp.push_back({{"point", row_text(th.field(), zp.point)},
                              {"kernel", matrix_text(zp.kernel)},
                              {"fixed", matrix_text(zp.fixed_kernel)},
                              {"dims", dims}});
            }
            emit(co.c, json{{"points", points.size()}, {"locus", jp}}, out.str());
        });
    }

    // replicate
    struct {
        Common c;
    } re;
    {
        auto* cmd = app.add_subcommand("replicate",
                                       "run the pinned worked-instance suite and print "
                                       "a pass/fail table");
        add_common(cmd, re.c);
        cmd->callback([&] {
            std::vector<CheckRow> rows;
            run_replicate_suite(rows);
            std::size_t passed = 0;
            std::ostringstream out;
            json jr = json::array();
            for (const CheckRow& row : rows) {
                passed += row.pass;
                out << (row.pass ? "[PASS] " : "[FAIL] ") << row.name << "\n";
                jr.push_back({{"name", row.name}, {"pass", row.pass}});
            }
            out << "result: " << passed << "/" << rows.size() << " passed\n";
            emit(re.c, json{{"checks", jr}, {"passed", passed}, {"total", rows.size()}},
                 out.str());
            if (passed != rows.size()) rc = 2;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

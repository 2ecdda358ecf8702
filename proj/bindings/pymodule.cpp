// Python bindings.  Field elements, rows and matrices cross the boundary as
// the same text literals the CLI uses ("a+1", "1,a,0", "0,1; 1,a"), so every
// value is exact and round-trips through the parsers.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "skewcodes/codec.hpp"
#include "skewcodes/construct.hpp"
#include "skewcodes/duals.hpp"
#include "skewcodes/embed.hpp"
#include "skewcodes/formats.hpp"

namespace py = pybind11;
using namespace skewcodes;

namespace {

struct PyField {
    FieldPtr F;
};

struct PyAut {
    Automorphism th;
};

struct PyPoly {
    SkewPoly p;
};

struct PyMat {
    Matrix M;
};

struct PyCode {
    ProductTCode code;

    std::vector<SkewPoly> moduli() const {
        std::vector<SkewPoly> fs;
        for (const ModuleThetaCode& c : code.components()) fs.push_back(c.f());
        return fs;
    }
};

RowVec parse_row_checked(const FieldPtr& F, const std::string& text, std::size_t want,
                         const char* what) {
    RowVec v = parse_row(F, text);
    if (v.size() != want)
        throw DomainError(std::string(what) + " has " + std::to_string(v.size()) +
                          " symbols, expected " + std::to_string(want));
    return v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "exact arithmetic for codes over F_q invariant under semi-linear "
        "transformations";
    m.attr("__version__") = "0.1.0";

    auto exc_domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
    py::register_exception<UncorrectableError>(m, "UncorrectableError", exc_domain.ptr());

    py::class_<PyField>(m, "Field")
        .def(py::init([](const std::string& spec) { return PyField{parse_field_spec(spec)}; }),
             py::arg("spec"), "build a field from a spec like 'p=2,s=2,mod=x^2+x+1,gen=a'")
        .def_property_readonly("p", [](const PyField& f) { return f.F->p(); })
        .def_property_readonly("s", [](const PyField& f) { return f.F->s(); })
        .def_property_readonly("q", [](const PyField& f) { return f.F->q(); })
        .def_property_readonly("spec", [](const PyField& f) { return field_spec_text(f.F); })
        .def("elements",
             [](const PyField& f) {
                 std::vector<std::string> out;
                 for (Field::Rep r = 0; r < f.F->q(); ++r) out.push_back(element_text(f.F, r));
                 return out;
             })
        .def("add",
             [](const PyField& f, const std::string& a, const std::string& b) {
                 return element_text(f.F, f.F->add(parse_element(f.F, a), parse_element(f.F, b)));
             })
        .def("sub",
             [](const PyField& f, const std::string& a, const std::string& b) {
                 return element_text(f.F, f.F->sub(parse_element(f.F, a), parse_element(f.F, b)));
             })
        .def("mul",
             [](const PyField& f, const std::string& a, const std::string& b) {
                 return element_text(f.F, f.F->mul(parse_element(f.F, a), parse_element(f.F, b)));
             })
        .def("div",
             [](const PyField& f, const std::string& a, const std::string& b) {
                 return element_text(f.F, f.F->div(parse_element(f.F, a), parse_element(f.F, b)));
             })
        .def("neg",
             [](const PyField& f, const std::string& a) {
                 return element_text(f.F, f.F->neg(parse_element(f.F, a)));
             })
        .def("inv",
             [](const PyField& f, const std::string& a) {
                 return element_text(f.F, f.F->inv(parse_element(f.F, a)));
             })
        .def("pow",
             [](const PyField& f, const std::string& a, long long e) {
                 return element_text(f.F, f.F->pow(parse_element(f.F, a), e));
             })
        .def("__repr__", [](const PyField& f) { return "Field(" + field_spec_text(f.F) + ")"; });

    py::class_<PyAut>(m, "Automorphism")
        .def(py::init([](const PyField& f, long long t) { return PyAut{Automorphism(f.F, t)}; }),
             py::arg("field"), py::arg("t"), "theta(a) = a^(p^t)")
        .def_property_readonly("exponent", [](const PyAut& a) { return a.th.exponent(); })
        .def_property_readonly("order", [](const PyAut& a) { return a.th.order(); })
        .def("apply",
             [](const PyAut& a, const std::string& x, long long power) {
                 return element_text(a.th.field(),
                                     a.th.apply(parse_element(a.th.field(), x), power));
             },
             py::arg("x"), py::arg("power") = 1)
        .def("fixed",
             [](const PyAut& a) {
                 std::vector<std::string> out;
                 for (Field::Rep r : a.th.fixed_subfield())
                     out.push_back(element_text(a.th.field(), r));
                 return out;
             })
        .def("__repr__",
             [](const PyAut& a) { return "Automorphism(t=" + std::to_string(a.th.exponent()) + ")"; });

    py::class_<PyPoly>(m, "Poly")
        .def(py::init([](const PyAut& th, const std::string& text) {
                 return PyPoly{parse_poly(th.th, text)};
             }),
             py::arg("theta"), py::arg("text"), "skew polynomial, e.g. 'x^3 + a*x + 1'")
        .def_property_readonly("is_zero", [](const PyPoly& p) { return p.p.is_zero(); })
        .def_property_readonly("degree",
                               [](const PyPoly& p) -> std::optional<unsigned> {
                                   if (p.p.is_zero()) return std::nullopt;
                                   return p.p.degree();
                               })
        .def("coeff",
             [](const PyPoly& p, std::size_t i) { return element_text(p.p.field(), p.p.coeff(i)); })
        .def("__add__", [](const PyPoly& a, const PyPoly& b) { return PyPoly{a.p + b.p}; })
        .def("__sub__", [](const PyPoly& a, const PyPoly& b) { return PyPoly{a.p - b.p}; })
        .def("__mul__", [](const PyPoly& a, const PyPoly& b) { return PyPoly{a.p * b.p}; })
        .def("__eq__", [](const PyPoly& a, const PyPoly& b) { return a.p == b.p; })
        .def("__ne__", [](const PyPoly& a, const PyPoly& b) { return a.p != b.p; })
        .def("__str__", [](const PyPoly& p) { return poly_text(p.p); })
        .def("__repr__", [](const PyPoly& p) { return "Poly(" + poly_text(p.p) + ")"; });

    py::class_<PyMat>(m, "Mat")
        .def(py::init([](const PyField& f, const std::string& text) {
                 return PyMat{parse_matrix(f.F, text)};
             }),
             py::arg("field"), py::arg("text"), "matrix literal, rows split by ';'")
        .def_property_readonly("rows", [](const PyMat& m_) { return m_.M.rows(); })
        .def_property_readonly("cols", [](const PyMat& m_) { return m_.M.cols(); })
        .def("at",
             [](const PyMat& m_, std::size_t i, std::size_t j) {
                 if (i >= m_.M.rows() || j >= m_.M.cols()) throw DomainError("index out of range");
                 return element_text(m_.M.field(), m_.M.at(i, j));
             })
        .def("row",
             [](const PyMat& m_, std::size_t i) {
                 if (i >= m_.M.rows()) throw DomainError("index out of range");
                 return row_text(m_.M.field(), m_.M.row(i));
             })
        .def("rank", [](const PyMat& m_) { return rank(m_.M); })
        .def("transpose", [](const PyMat& m_) { return PyMat{m_.M.transpose()}; })
        .def("inverse", [](const PyMat& m_) { return PyMat{inverse(m_.M)}; })
        .def("det", [](const PyMat& m_) { return element_text(m_.M.field(), det(m_.M).rep()); })
        .def("__mul__", [](const PyMat& a, const PyMat& b) { return PyMat{a.M * b.M}; })
        .def("__add__", [](const PyMat& a, const PyMat& b) { return PyMat{a.M + b.M}; })
        .def("__eq__", [](const PyMat& a, const PyMat& b) { return a.M == b.M; })
        .def("__ne__", [](const PyMat& a, const PyMat& b) { return a.M != b.M; })
        .def("__str__", [](const PyMat& m_) { return matrix_text(m_.M); })
        .def("__repr__", [](const PyMat& m_) { return "Mat(" + matrix_text(m_.M) + ")"; });

    py::class_<PyCode>(m, "Code")
        .def(py::init([](const std::string& descriptor) {
                 return PyCode{parse_code_descriptor(descriptor)};
             }),
             py::arg("descriptor"),
             "line-oriented descriptor: field spec, t=, one 'f=...; g=...' per "
             "component, optional C=")
        .def_property_readonly("n", [](const PyCode& c) { return c.code.n(); })
        .def_property_readonly("k", [](const PyCode& c) { return c.code.k(); })
        .def_property_readonly("components",
                               [](const PyCode& c) { return c.code.component_count(); })
        .def_property_readonly("descriptor",
                               [](const PyCode& c) { return code_descriptor_text(c.code); })
        .def("generator", [](const PyCode& c) { return PyMat{c.code.generator_matrix()}; })
        .def("contains",
             [](const PyCode& c, const std::string& word) {
                 return c.code.contains(
                     parse_row_checked(c.code.field(), word, c.code.n(), "word"));
             })
        .def("is_invariant",
             [](const PyCode& c, const PyMat& rows) {
                 return is_invariant(c.code.invariance_map(), rows.M);
             },
             py::arg("rows"), "is the row space carried into itself by the code's map")
        .def("min_distance",
             [](const PyCode& c, std::uint64_t budget) {
                 return min_distance(LinearCode(c.code.generator_matrix()), budget);
             },
             py::arg("budget") = (std::uint64_t)1 << 20)
        .def("syndrome",
             [](const PyCode& c, const std::string& word) {
                 std::vector<std::string> out;
                 for (const SkewPoly& s : syndrome(
                          parse_row_checked(c.code.field(), word, c.code.n(), "word"), c.code))
                     out.push_back(poly_text(s));
                 return out;
             })
        .def("encode",
             [](const PyCode& c, const std::string& message, const std::string& method) {
                 if (method != "poly" && method != "matrix")
                     throw DomainError("method must be 'poly' or 'matrix'");
                 RowVec flat =
                     parse_row_checked(c.code.field(), message, c.code.k(), "message");
                 Message msg;
                 std::size_t off = 0;
                 for (const ModuleThetaCode& comp : c.code.components()) {
                     msg.emplace_back(flat.begin() + off, flat.begin() + off + comp.k());
                     off += comp.k();
                 }
                 RowVec cw = encode(msg, c.code,
                                    method == "poly" ? EncodeMethod::poly : EncodeMethod::matrix);
                 return row_text(c.code.field(), cw);
             },
             py::arg("message"), py::arg("method") = "poly")
        .def("decode",
             [](const PyCode& c, const std::string& word, std::uint64_t budget) {
                 SyndromeTable table(c.code, budget);
                 DecodedWord dw = meggitt_decode(
                     parse_row_checked(c.code.field(), word, c.code.n(), "word"), table, c.code);
                 RowVec msg;
                 for (const RowVec& b : decode_plain(dw.codeword, c.code))
                     msg.insert(msg.end(), b.begin(), b.end());
                 std::size_t weight = 0;
                 for (Field::Rep r : dw.error) weight += r != 0;
                 py::dict out;
                 out["codeword"] = row_text(c.code.field(), dw.codeword);
                 out["error"] = row_text(c.code.field(), dw.error);
                 out["weight"] = weight;
                 out["message"] = row_text(c.code.field(), msg);
                 return out;
             },
             py::arg("word"), py::arg("budget") = SyndromeTable::default_budget)
        .def("dual",
             [](const PyCode& c, const std::string& kind) {
                 LinearCode primal(c.code.generator_matrix());
                 if (kind == "euclidean") return PyMat{euclidean_dual(primal).generators()};
                 EmbeddingData ed = embedding(c.moduli(), c.code.conjugator());
                 if (kind == "quasi")
                     return PyMat{quasi_euclidean_dual(primal, ed).generators()};
                 if (kind == "hermitian") {
                     HermitianContext ctx(std::move(ed));
                     ctx.require_valid();
                     return PyMat{hermitian_dual(c.code, ctx).generators()};
                 }
                 throw DomainError("kind must be 'euclidean', 'quasi' or 'hermitian'");
             },
             py::arg("kind") = "euclidean")
        .def("dual_generators",
             [](const PyCode& c) -> std::optional<std::vector<std::string>> {
                 EmbeddingData ed = embedding(c.moduli(), c.code.conjugator());
                 try {
                     ProductTCode dual = quasi_dual_generator(c.code, ed);
                     std::vector<std::string> out;
                     for (const ModuleThetaCode& comp : dual.components())
                         out.push_back(poly_text(comp.g()));
                     return out;
                 } catch (const Error&) {
                     return std::nullopt;
                 }
             },
             "per-component generators of the quasi-Euclidean dual, or None when "
             "the cofactor recipe does not apply")
        .def("__repr__", [](const PyCode& c) {
            return "Code(n=" + std::to_string(c.code.n()) + ", k=" + std::to_string(c.code.k()) +
                   ")";
        });

    m.def("period",
          [](const PyPoly& f) {
              PeriodData pd = period(f.p);
              return py::make_tuple(pd.m, PyPoly{pd.q_f});
          },
          py::arg("f"), "least m with x^m - 1 a left multiple of f, and the multiplier");
    m.def("right_quotrem",
          [](const PyPoly& a, const PyPoly& b) {
              QuotRem qr = right_quotrem(a.p, b.p);
              return py::make_tuple(PyPoly{qr.quot}, PyPoly{qr.rem});
          });
    m.def("left_quotrem", [](const PyPoly& a, const PyPoly& b) {
        QuotRem qr = left_quotrem(a.p, b.p);
        return py::make_tuple(PyPoly{qr.quot}, PyPoly{qr.rem});
    });
    m.def("right_gcd", [](const PyPoly& a, const PyPoly& b) {
        RightGcd g = right_gcd(a.p, b.p);
        return py::make_tuple(PyPoly{g.g}, PyPoly{g.u}, PyPoly{g.v});
    });
    m.def("left_lcm", [](const PyPoly& a, const PyPoly& b) { return PyPoly{left_lcm(a.p, b.p)}; });
    m.def("right_divisors",
          [](const PyPoly& f, unsigned degree, bool allow_zero_const, std::uint64_t budget) {
              std::vector<std::pair<PyPoly, PyPoly>> out;
              for (auto& [g, q] : right_divisors(f.p, degree, allow_zero_const, budget))
                  out.emplace_back(PyPoly{g}, PyPoly{q});
              return out;
          },
          py::arg("f"), py::arg("degree"), py::arg("allow_zero_const") = false,
          py::arg("budget") = (std::uint64_t)1 << 20);
    m.def("companion", [](const PyPoly& f) { return PyMat{companion(f.p)}; });
    m.def("matrix_order",
          [](const PyMat& M, std::uint64_t budget) { return matrix_order(M.M, budget); },
          py::arg("M"), py::arg("budget") = (std::uint64_t)1 << 20);
    m.def("embedding_form",
          [](const std::vector<PyPoly>& fs, std::optional<PyMat> C) {
              std::vector<SkewPoly> polys;
              for (const PyPoly& f : fs) polys.push_back(f.p);
              EmbeddingData ed = C ? embedding(polys, C->M) : embedding(polys);
              std::vector<std::size_t> periods;
              for (const PeriodData& pd : ed.periods) periods.push_back(pd.m);
              py::dict out;
              out["periods"] = periods;
              out["m"] = ed.m();
              out["B"] = PyMat{ed.B};
              out["rank"] = ed.rank_B;
              return out;
          },
          py::arg("components"), py::arg("C") = std::nullopt,
          "periods, total length and bilinear form of the cyclic embedding");
    m.def("distance_table",
          [](const PyField& F, long long t, std::size_t n_max, std::uint64_t budget) {
              Automorphism th(F.F, t);
              DistanceTable table = distance_table(F.F, th, n_max, budget);
              py::dict out;
              for (const auto& [nk, d] : table.cells)
                  out[py::make_tuple(nk.first, nk.second)] =
                      d ? py::cast(*d) : py::object(py::none());
              return out;
          },
          py::arg("field"), py::arg("t"), py::arg("n_max"),
          py::arg("budget") = (std::uint64_t)1 << 20,
          "(n, k) -> best module-code minimum distance, None when not computed");
    m.def("zero_locus",
          [](const PyMat& A, const PyAut& th, std::size_t h, std::uint64_t budget) {
              TwistedPowers tp = twisted_powers(A.M, th.th, h);
              SemiLinearMap T(th.th, A.M);
              py::list out;
              for (const ZeroLocusPoint& zp : zero_locus_scan(tp, budget)) {
                  py::dict d;
                  d["point"] = row_text(A.M.field(), zp.point);
                  d["kernel"] = PyMat{zp.kernel};
                  d["fixed"] = PyMat{zp.fixed_kernel};
                  std::vector<std::size_t> dims;
                  for (std::size_t i = 0; i < zp.fixed_kernel.rows(); ++i)
                      dims.push_back(code_from_point(T, zp.fixed_kernel.row(i), h).k());
                  d["dims"] = dims;
                  out.append(d);
              }
              return out;
          },
          py::arg("A"), py::arg("theta"), py::arg("h"),
          py::arg("budget") = (std::uint64_t)1 << 20,
          "projective points where the twisted determinant vanishes, with kernel "
          "data and the dimensions of the codes seeded by the fixed-subfield rows");
}

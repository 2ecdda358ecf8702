#include "skewcodes/formats.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <vector>

namespace skewcodes {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && is_space(s[a])) ++a;
    while (b > a && is_space(s[b - 1])) --b;
    return s.substr(a, b - a);
}

std::string drop_space(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!is_space(c)) out += c;
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

unsigned long long parse_uint(const std::string& s, const std::string& what) {
    unsigned long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ParseError("expected an unsigned integer for " + what + ", got '" + s + "'");
    return v;
}

// One summand with its leading sign, parentheses kept intact.
struct SignedTerm {
    bool negated;
    std::string body;
};

// Split a whitespace-free expression at top-level '+' and '-'.
std::vector<SignedTerm> split_terms(const std::string& s) {
    if (s.empty()) throw ParseError("empty expression");
    std::vector<SignedTerm> out;
    int depth = 0;
    bool neg = false;
    std::string cur;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') {
            ++depth;
            cur += c;
        } else if (c == ')') {
            if (--depth < 0) throw ParseError("unbalanced ')' in '" + s + "'");
            cur += c;
        } else if ((c == '+' || c == '-') && depth == 0) {
            if (cur.empty()) throw ParseError("empty term in '" + s + "'");
            out.push_back({neg, cur});
            cur.clear();
            neg = c == '-';
        } else {
            cur += c;
        }
    }
    if (depth != 0) throw ParseError("unbalanced '(' in '" + s + "'");
    if (cur.empty()) throw ParseError("trailing operator in '" + s + "'");
    out.push_back({neg, cur});
    return out;
}

// Leading run of decimal digits; empty result means "no integer here".
std::string take_digits(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
}

// One product term of an element literal: INT, GEN^k, or INT*GEN^k.
Field::Rep element_term(const FieldPtr& F, const std::string& term) {
    std::size_t pos = 0;
    std::string digits = take_digits(term, pos);
    Field::Rep value = digits.empty() ? 1 : F->from_int((long long)parse_uint(digits, "coefficient"));
    if (pos < term.size() && term[pos] == '*') ++pos;
    std::string rest = term.substr(pos);
    if (rest.empty()) {
        if (digits.empty()) throw ParseError("empty factor in '" + term + "'");
        return value;
    }
    const std::string& gen = F->gen_name();
    if (F->s() == 1)
        throw ParseError("'" + rest + "' is not an element of a prime field");
    if (rest.compare(0, gen.size(), gen) != 0)
        throw ParseError("unknown symbol in element '" + term + "'");
    std::string tail = rest.substr(gen.size());
    unsigned long long power = 1;
    if (!tail.empty()) {
        if (tail[0] != '^')
            throw ParseError("unknown symbol in element '" + term + "'");
        power = parse_uint(tail.substr(1), "exponent");
    }
    return F->mul(value, F->pow(F->gen_rep(), (long long)power));
}

// Strip one pair of outer parentheses if they wrap the whole string.
std::string unwrap(const std::string& s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return s;
    int depth = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')' && --depth == 0) return s;  // closes before the end
    }
    return s.substr(1, s.size() - 2);
}

// ---- integer polynomials in x over F_p (used only for field moduli) ----

std::vector<unsigned> parse_int_poly(const std::string& text, unsigned p) {
    std::string s = drop_space(text);
    std::map<unsigned long long, unsigned> coeff;
    for (const auto& [negated, term] : split_terms(s)) {
        std::size_t pos = 0;
        std::string digits = take_digits(term, pos);
        unsigned long long c = digits.empty() ? 1 : parse_uint(digits, "coefficient");
        if (pos < term.size() && term[pos] == '*') ++pos;
        std::string rest = term.substr(pos);
        unsigned long long k = 0;
        if (rest.empty()) {
            if (digits.empty()) throw ParseError("empty factor in '" + term + "'");
        } else if (rest == "x") {
            k = 1;
        } else if (rest.compare(0, 2, "x^") == 0) {
            k = parse_uint(rest.substr(2), "exponent");
        } else {
            throw ParseError("unknown symbol in modulus term '" + term + "'");
        }
        unsigned long long v = c % p;
        if (negated) v = (p - v) % p;
        coeff[k] = (coeff[k] + v) % p;
    }
    unsigned long long deg = 0;
    for (const auto& [k, c] : coeff)
        if (c != 0) deg = std::max(deg, k);
    std::vector<unsigned> out(deg + 1, 0);
    for (const auto& [k, c] : coeff) out[k] = c;
    return out;
}

std::string int_poly_text(const std::vector<unsigned>& poly) {
    std::string out;
    for (std::size_t i = poly.size(); i-- > 0;) {
        if (poly[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(poly[i]);
        } else {
            if (poly[i] != 1) out += std::to_string(poly[i]) + "*";
            out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

FieldPtr parse_field_spec(const std::string& text) {
    std::map<std::string, std::string> kv;
    for (const std::string& raw : split(text, ',')) {
        std::string tok = strip(raw);
        if (tok.empty()) throw ParseError("empty entry in field spec '" + text + "'");
        std::size_t eq = tok.find('=');
        if (eq == std::string::npos)
            throw ParseError("field spec entry '" + tok + "' is not key=value");
        std::string key = strip(tok.substr(0, eq));
        std::string val = strip(tok.substr(eq + 1));
        if (key != "p" && key != "s" && key != "mod" && key != "gen")
            throw ParseError("unknown field spec key '" + key + "'");
        if (!kv.emplace(key, val).second)
            throw ParseError("duplicate field spec key '" + key + "'");
    }
    if (!kv.count("p") || !kv.count("s"))
        throw ParseError("field spec needs p= and s=");
    auto p = (unsigned)parse_uint(kv["p"], "p");
    auto s = (unsigned)parse_uint(kv["s"], "s");
    std::vector<unsigned> mod;
    if (kv.count("mod")) mod = parse_int_poly(kv["mod"], p == 0 ? 2 : p);
    std::string gen = kv.count("gen") ? kv["gen"] : "a";
    if (gen.empty()) throw ParseError("empty generator name");
    for (char c : gen)
        if (!std::isalpha(static_cast<unsigned char>(c)) || c == 'x')
            throw ParseError("generator name '" + gen +
                             "' must be alphabetic and must not contain 'x'");
    return Field::make(p, s, std::move(mod), std::move(gen));
}

std::string field_spec_text(const FieldPtr& F) {
    std::string out = "p=" + std::to_string(F->p()) + ",s=" + std::to_string(F->s());
    if (F->s() > 1)
        out += ",mod=" + int_poly_text(F->modulus()) + ",gen=" + F->gen_name();
    return out;
}

Field::Rep parse_element(const FieldPtr& F, const std::string& text) {
    std::string s = drop_space(text);
    Field::Rep acc = 0;
    for (const auto& [negated, term] : split_terms(s)) {
        std::string body = unwrap(term);
        Field::Rep v = body == term ? element_term(F, body) : parse_element(F, body);
        acc = F->add(acc, negated ? F->neg(v) : v);
    }
    return acc;
}

std::string element_text(const FieldPtr& F, Field::Rep a) {
    if (a >= F->q()) throw DomainError("element rep out of range");
    if (a == 0) return "0";
    if (F->s() == 1) return std::to_string(a);
    std::vector<unsigned> d = F->rep_digits(a);
    std::string out;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(d[i]);
        } else {
            if (d[i] != 1) out += std::to_string(d[i]) + "*";
            out += i == 1 ? F->gen_name() : F->gen_name() + "^" + std::to_string(i);
        }
    }
    return out;
}

SkewPoly parse_poly(const Automorphism& theta, const std::string& text) {
    const FieldPtr& F = theta.field();
    if (F->s() > 1 && F->gen_name().find('x') != std::string::npos)
        throw ParseError("generator name collides with the polynomial variable");
    std::string s = drop_space(text);
    std::map<unsigned long long, Field::Rep> coeff;
    for (const auto& [negated, term] : split_terms(s)) {
        // locate the variable: any top-level 'x' (the generator never has one)
        std::size_t xpos = std::string::npos;
        int depth = 0;
        for (std::size_t i = 0; i < term.size(); ++i) {
            if (term[i] == '(') ++depth;
            if (term[i] == ')') --depth;
            if (term[i] == 'x' && depth == 0) {
                xpos = i;
                break;
            }
        }
        Field::Rep c;
        unsigned long long k = 0;
        if (xpos == std::string::npos) {
            c = parse_element(F, unwrap(term));
        } else {
            std::string before = term.substr(0, xpos);
            std::string after = term.substr(xpos + 1);
            if (!before.empty() && before.back() == '*') before.pop_back();
            c = before.empty() ? 1 : parse_element(F, unwrap(before));
            if (after.empty()) {
                k = 1;
            } else if (after[0] == '^') {
                k = parse_uint(after.substr(1), "exponent");
            } else {
                throw ParseError("malformed term '" + term + "'");
            }
        }
        Field::Rep v = negated ? F->neg(c) : c;
        auto it = coeff.find(k);
        coeff[k] = F->add(it == coeff.end() ? 0 : it->second, v);
    }
    unsigned long long deg = 0;
    for (const auto& [k, c] : coeff)
        if (c != 0) deg = std::max(deg, k);
    std::vector<Field::Rep> reps(deg + 1, 0);
    for (const auto& [k, c] : coeff)
        if (c != 0) reps[k] = c;
    return SkewPoly::of_reps(theta, std::move(reps));
}

std::string poly_text(const SkewPoly& p) {
    if (p.is_zero()) return "0";
    const FieldPtr& F = p.field();
    std::string out;
    for (std::size_t i = p.degree() + 1; i-- > 0;) {
        Field::Rep c = p.coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += element_text(F, c);
            continue;
        }
        std::string xs = i == 1 ? "x" : "x^" + std::to_string(i);
        if (c == 1) {
            out += xs;
        } else {
            std::string ct = element_text(F, c);
            bool wrap = ct.find('+') != std::string::npos || ct.find('*') != std::string::npos;
            out += (wrap ? "(" + ct + ")" : ct) + "*" + xs;
        }
    }
    return out;
}

Matrix parse_matrix(const FieldPtr& F, const std::string& text) {
    std::string body = strip(text);
    if (body.empty()) return Matrix(F, 0, 0);
    std::vector<RowVec> rows;
    std::size_t cols = 0;
    for (const std::string& rtext : split(body, ';')) {
        RowVec row = parse_row(F, rtext);
        if (rows.empty())
            cols = row.size();
        else if (row.size() != cols)
            throw ParseError("matrix rows have unequal lengths");
        rows.push_back(std::move(row));
    }
    return Matrix::from_rows(F, rows, cols);
}

std::string matrix_text(const Matrix& M) {
    std::string out;
    for (std::size_t i = 0; i < M.rows(); ++i) {
        if (i) out += "; ";
        out += row_text(M.field(), M.row(i));
    }
    return out;
}

RowVec parse_row(const FieldPtr& F, const std::string& text) {
    RowVec out;
    for (const std::string& etext : split(text, ','))
        out.push_back(parse_element(F, etext));
    return out;
}

std::string row_text(const FieldPtr& F, const RowVec& v) {
    std::string out;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j) out += ',';
        out += element_text(F, v[j]);
    }
    return out;
}

namespace {

// Comment-stripped, trimmed, non-empty lines of a descriptor.
std::vector<std::string> descriptor_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = strip(line);
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

long long parse_exponent_line(const std::string& line) {
    if (line.compare(0, 2, "t=") != 0)
        throw ParseError("expected 't=<exponent>', got '" + line + "'");
    std::string v = strip(line.substr(2));
    bool neg = !v.empty() && v[0] == '-';
    if (neg) v = v.substr(1);
    auto mag = (long long)parse_uint(v, "automorphism exponent");
    return neg ? -mag : mag;
}

}  // namespace

ProductTCode parse_code_descriptor(const std::string& text) {
    std::vector<std::string> lines = descriptor_lines(text);
    if (lines.size() < 3)
        throw ParseError("code descriptor needs a field spec, an exponent and a component");
    FieldPtr F = parse_field_spec(lines[0]);
    Automorphism theta(F, parse_exponent_line(lines[1]));
    std::vector<ModuleThetaCode> comps;
    Matrix C;
    bool have_c = false;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (have_c) throw ParseError("C= must be the last descriptor line");
        if (line.compare(0, 2, "C=") == 0) {
            C = parse_matrix(F, line.substr(2));
            have_c = true;
            continue;
        }
        std::vector<std::string> halves = split(line, ';');
        if (halves.size() != 2)
            throw ParseError("component line must read 'f=<poly>; g=<poly>'");
        std::string ftext = strip(halves[0]);
        std::string gtext = strip(halves[1]);
        if (ftext.compare(0, 2, "f=") != 0 || gtext.compare(0, 2, "g=") != 0)
            throw ParseError("component line must read 'f=<poly>; g=<poly>'");
        comps.emplace_back(parse_poly(theta, ftext.substr(2)),
                           parse_poly(theta, gtext.substr(2)));
    }
    if (comps.empty()) throw ParseError("code descriptor has no components");
    if (have_c) return ProductTCode(std::move(comps), std::move(C));
    return ProductTCode::direct_product(std::move(comps));
}

std::string code_descriptor_text(const ProductTCode& code) {
    std::string out = field_spec_text(code.field()) + "\n";
    out += "t=" + std::to_string(code.theta().exponent()) + "\n";
    for (const ModuleThetaCode& comp : code.components())
        out += "f=" + poly_text(comp.f()) + "; g=" + poly_text(comp.g()) + "\n";
    if (!code.conjugator().is_identity())
        out += "C=" + matrix_text(code.conjugator()) + "\n";
    return out;
}

SemiLinearMap parse_map_descriptor(const std::string& text) {
    std::vector<std::string> lines = descriptor_lines(text);
    if (lines.size() != 3)
        throw ParseError("map descriptor needs exactly a field spec, t= and M= line");
    FieldPtr F = parse_field_spec(lines[0]);
    Automorphism theta(F, parse_exponent_line(lines[1]));
    if (lines[2].compare(0, 2, "M=") != 0)
        throw ParseError("expected 'M=<matrix>', got '" + lines[2] + "'");
    return SemiLinearMap(theta, parse_matrix(F, lines[2].substr(2)));
}

std::string map_descriptor_text(const SemiLinearMap& T) {
    std::string out = field_spec_text(T.theta().field()) + "\n";
    out += "t=" + std::to_string(T.theta().exponent()) + "\n";
    out += "M=" + matrix_text(T.matrix()) + "\n";
    return out;
}

}  // namespace skewcodes

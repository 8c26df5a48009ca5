#include "superalg/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace salg {

namespace {

bool name_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '[' || c == ']' ||
           c == '\'';
}

bool valid_name(const std::string& s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), name_char);
}

std::string trim(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

struct Term {
    std::string scalar; // empty: coefficient 1
    std::string name;
    size_t column;      // 1-based, within the line
};

// Split at top-level '+' and binary '-'; a '-' starts a negated term.
std::vector<Term> split_terms(const std::string& text, size_t col0, size_t line)
{
    std::vector<std::pair<std::string, size_t>> pieces;
    int depth = 0;
    size_t start = 0;
    bool negate_next = false;
    std::vector<bool> negated;
    auto flush = [&](size_t end) {
        std::string t = text.substr(start, end - start);
        size_t lead = t.find_first_not_of(" \t");
        if (lead == std::string::npos)
            throw DslError("empty term in linear combination", line, col0 + start);
        pieces.push_back({trim(t), col0 + start + lead});
        negated.push_back(negate_next);
    };
    for (size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '(')
            ++depth;
        else if (ch == ')') {
            if (--depth < 0)
                throw DslError("unbalanced ')'", line, col0 + i);
        } else if (depth == 0 && (ch == '+' || ch == '-')) {
            // binary if something other than an operator precedes it
            size_t k = i;
            while (k > start && std::isspace(static_cast<unsigned char>(text[k - 1])))
                --k;
            bool binary = k > start && (name_char(text[k - 1]) || text[k - 1] == ')');
            if (!binary)
                continue;
            flush(i);
            negate_next = ch == '-';
            start = i + 1;
        }
    }
    if (depth != 0)
        throw DslError("unbalanced '('", line, col0 + text.size());
    flush(text.size());
    std::vector<Term> out;
    for (size_t t = 0; t < pieces.size(); ++t) {
        auto& [s, col] = pieces[t];
        // the last top-level '*' separates the scalar from the name
        int d = 0;
        size_t star = std::string::npos;
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '(')
                ++d;
            else if (s[i] == ')')
                --d;
            else if (s[i] == '*' && d == 0)
                star = i;
        }
        Term term;
        term.column = col;
        if (star == std::string::npos) {
            term.name = s;
            if (!s.empty() && s[0] == '-') {
                term.scalar = "-1";
                term.name = trim(s.substr(1));
            }
        } else {
            term.scalar = trim(s.substr(0, star));
            term.name = trim(s.substr(star + 1));
        }
        if (negated[t])
            term.scalar = term.scalar.empty() ? "-1" : "-(" + term.scalar + ")";
        out.push_back(std::move(term));
    }
    return out;
}

std::vector<Scalar> parse_lincomb(const std::string& text, size_t col0, size_t line, const Ring* r,
                                  const std::map<std::string, size_t>& index)
{
    std::vector<Scalar> v(index.size(), Scalar(r));
    if (trim(text) == "0" && !index.count("0"))
        return v;
    for (auto& t : split_terms(text, col0, line)) {
        auto it = index.find(t.name);
        if (it == index.end())
            throw DslError("undeclared basis element '" + t.name + "'", line, t.column);
        Scalar c = Scalar::constant(r, 1);
        if (!t.scalar.empty()) {
            try {
                c = Scalar::parse(r, t.scalar);
            } catch (const Error& e) {
                throw DslError(std::string("bad coefficient: ") + e.what(), line, t.column);
            }
        }
        v[it->second] = v[it->second] + c;
    }
    return v;
}

} // namespace

AlgebraDocument parse_document(const std::string& text)
{
    AlgebraDocument doc;
    std::istringstream in(text);
    std::string raw;
    size_t lineno = 0;
    std::set<std::string> seen_kw;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        size_t kw0 = line.find_first_not_of(" \t\r");
        if (kw0 == std::string::npos)
            continue;
        size_t kw1 = line.find_first_of(" \t\r", kw0);
        if (kw1 == std::string::npos)
            kw1 = line.size();
        std::string kw = line.substr(kw0, kw1 - kw0);
        std::string rest = line.substr(kw1);
        auto words = [&]() {
            std::vector<std::pair<std::string, size_t>> w;
            size_t i = 0;
            while (i < rest.size()) {
                while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i])))
                    ++i;
                size_t j = i;
                while (j < rest.size() && !std::isspace(static_cast<unsigned char>(rest[j])))
                    ++j;
                if (j > i)
                    w.push_back({rest.substr(i, j - i), kw1 + i + 1});
                i = j;
            }
            return w;
        };
        auto once = [&]() {
            if (!seen_kw.insert(kw).second)
                throw DslError("repeated '" + kw + "' statement", lineno, kw0 + 1);
        };
        auto names = [&](bool need_one) {
            std::vector<std::string> out;
            for (auto& [w, col] : words()) {
                if (!valid_name(w))
                    throw DslError("invalid name '" + w + "'", lineno, col);
                out.push_back(w);
            }
            if (need_one && out.empty())
                throw DslError("'" + kw + "' needs at least one name", lineno, kw0 + 1);
            return out;
        };
        if (kw == "algebra") {
            once();
            doc.name = trim(rest);
            if (doc.name.empty())
                throw DslError("missing algebra name", lineno, kw1 + 1);
        } else if (kw == "char") {
            once();
            auto w = words();
            if (w.size() != 1 || !std::all_of(w[0].first.begin(), w[0].first.end(), ::isdigit) ||
                w[0].first.size() > 9)
                throw DslError("char expects one non-negative integer", lineno, kw1 + 1);
            long p = std::stol(w[0].first);
            if (p != 0 && !is_prime(uint64_t(p)))
                throw DslError("characteristic must be 0 or a prime", lineno, w[0].second);
            doc.characteristic = uint32_t(p);
        } else if (kw == "params") {
            once();
            for (auto& [w, col] : words()) {
                if (!std::isalpha(static_cast<unsigned char>(w[0])) ||
                    !std::all_of(w.begin(), w.end(), [](char c) { return std::isalnum((unsigned char)c) || c == '_'; }))
                    throw DslError("invalid parameter name '" + w + "'", lineno, col);
                doc.params.push_back(w);
            }
        } else if (kw == "basis") {
            once();
            doc.basis = names(true);
            std::set<std::string> s;
            for (auto& [w, col] : words())
                if (!s.insert(w).second)
                    throw DslError("duplicate basis name '" + w + "'", lineno, col);
        } else if (kw == "odd") {
            once();
            doc.odd = names(false);
        } else if (kw == "unit") {
            once();
            if (trim(rest).empty())
                throw DslError("missing unit", lineno, kw1 + 1);
            doc.unit = rest;
            doc.unit_line = lineno;
            doc.unit_column = kw1 + 1;
        } else if (kw == "mul") {
            auto eq = rest.find('=');
            if (eq == std::string::npos)
                throw DslError("expected 'mul LEFT RIGHT = LINCOMB'", lineno, kw0 + 1);
            std::istringstream lhs(rest.substr(0, eq));
            MulLine m;
            std::string extra;
            if (!(lhs >> m.left >> m.right) || (lhs >> extra))
                throw DslError("expected two basis names before '='", lineno, kw1 + 1);
            m.rhs = rest.substr(eq + 1);
            m.line = lineno;
            m.rhs_column = kw1 + eq + 2;
            if (trim(m.rhs).empty())
                throw DslError("empty right-hand side", lineno, kw1 + eq + 2);
            doc.mul.push_back(std::move(m));
        } else {
            throw DslError("unknown statement '" + kw + "'", lineno, kw0 + 1);
        }
    }
    if (doc.basis.empty())
        throw DslError("missing 'basis' statement", lineno + 1, 1);
    return doc;
}

AlgebraPtr build_algebra(const AlgebraDocument& doc)
{
    const Ring* r;
    try {
        r = Ring::get(doc.characteristic, doc.params);
    } catch (const Error& e) {
        throw DslError(e.what(), 1, 1);
    }
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < doc.basis.size(); ++i)
        index[doc.basis[i]] = i;
    size_t n = doc.basis.size();
    std::vector<int> par(n, 0);
    for (auto& o : doc.odd) {
        auto it = index.find(o);
        if (it == index.end())
            throw DslError("odd element '" + o + "' is not in the basis", 1, 1);
        par[it->second] = 1;
    }
    std::vector<std::optional<std::vector<Scalar>>> rows(n * n);
    std::vector<size_t> row_line(n * n, 0);
    for (auto& m : doc.mul) {
        auto li = index.find(m.left), ri = index.find(m.right);
        if (li == index.end())
            throw DslError("undeclared basis element '" + m.left + "'", m.line, 1);
        if (ri == index.end())
            throw DslError("undeclared basis element '" + m.right + "'", m.line, 1);
        size_t slot = li->second * n + ri->second;
        if (rows[slot])
            throw DslError("product " + m.left + " " + m.right + " given twice", m.line, 1);
        rows[slot] = parse_lincomb(m.rhs, m.rhs_column, m.line, r, index);
        row_line[slot] = m.line;
    }
    std::optional<std::vector<Scalar>> unit;
    if (doc.unit) {
        unit = parse_lincomb(*doc.unit, doc.unit_column, doc.unit_line, r, index);
        // a single basis element with coefficient 1 implies its products
        std::optional<size_t> u;
        for (size_t i = 0; i < n; ++i)
            if (!(*unit)[i].is_zero()) {
                if (u || !(*unit)[i].is_one()) {
                    u.reset();
                    break;
                }
                u = i;
            }
        size_t nz = size_t(std::count_if(unit->begin(), unit->end(), [](const Scalar& s) { return !s.is_zero(); }));
        if (u && nz == 1)
            for (size_t i = 0; i < n; ++i)
                for (size_t slot : {*u * n + i, i * n + *u})
                    if (!rows[slot]) {
                        std::vector<Scalar> v(n, Scalar(r));
                        v[i] = Scalar::constant(r, 1);
                        rows[slot] = v;
                    }
    }
    TableBuilder tb(r, n);
    for (size_t s = 0; s < n * n; ++s)
        if (rows[s])
            for (size_t k = 0; k < n; ++k)
                if (!(*rows[s])[k].is_zero())
                    tb.add(s / n, s % n, k, (*rows[s])[k]);
    try {
        return SuperAlgebra::make(doc.name, r, doc.basis, par, tb.build(), unit);
    } catch (const GradingError& e) {
        size_t line = row_line[e.i * n + e.j];
        throw DslError("grading violation: " + doc.basis[e.i] + " * " + doc.basis[e.j] + " has a component on " +
                           doc.basis[e.k] + " (indices " + std::to_string(e.i) + "," + std::to_string(e.j) + "," +
                           std::to_string(e.k) + ")",
                       line ? line : 1, 1);
    } catch (const DslError&) {
        throw;
    } catch (const Error& e) {
        throw DslError(e.what(), doc.unit_line ? doc.unit_line : 1, 1);
    }
}

AlgebraPtr parse_algebra(const std::string& text)
{
    return build_algebra(parse_document(text));
}

std::string serialize_algebra(const SuperAlgebra& A)
{
    std::ostringstream out;
    out << "algebra " << A.name() << "\n";
    out << "char " << A.ring()->characteristic() << "\n";
    if (!A.ring()->params().empty()) {
        out << "params";
        for (auto& p : A.ring()->params())
            out << " " << p;
        out << "\n";
    }
    out << "basis";
    for (auto& b : A.basis_names())
        out << " " << b;
    out << "\n";
    bool any_odd = false;
    for (size_t i = 0; i < A.dim(); ++i)
        any_odd = any_odd || A.parity(i);
    if (any_odd) {
        out << "odd";
        for (size_t i = 0; i < A.dim(); ++i)
            if (A.parity(i))
                out << " " << A.basis_name(i);
        out << "\n";
    }
    std::optional<size_t> u;
    if (A.has_unit()) {
        Element e = A.unit();
        out << "unit " << e.str() << "\n";
        size_t nz = 0;
        for (size_t i = 0; i < A.dim(); ++i)
            if (!e[i].is_zero()) {
                ++nz;
                if (e[i].is_one())
                    u = i;
            }
        if (nz != 1)
            u.reset();
    }
    for (size_t i = 0; i < A.dim(); ++i)
        for (size_t j = 0; j < A.dim(); ++j) {
            if (u && (i == *u || j == *u))
                continue; // implied by the unit
            Element p = A.basis(i) * A.basis(j);
            if (p.is_zero())
                continue;
            out << "mul " << A.basis_name(i) << " " << A.basis_name(j) << " = " << p.str() << "\n";
        }
    return out.str();
}

bool same_structure(const SuperAlgebra& A, const SuperAlgebra& B)
{
    if (A.ring() != B.ring() || A.basis_names() != B.basis_names() || A.parities() != B.parities() ||
        A.has_unit() != B.has_unit())
        return false;
    if (A.has_unit() && *A.unit_coords() != *B.unit_coords())
        return false;
    for (size_t s = 0; s < A.table().size(); ++s) {
        auto &x = A.table()[s], &y = B.table()[s];
        if (x.size() != y.size())
            return false;
        for (size_t t = 0; t < x.size(); ++t)
            if (x[t].k != y[t].k || x[t].c != y[t].c)
                return false;
    }
    return true;
}

} // namespace salg

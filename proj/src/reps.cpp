#include "salembraid/reps.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace salembraid {

namespace {

RatFunc rc(const VarsPtr& vars, long c) { return RatFunc::constant(vars, mpq_class(c)); }

bool is_singular(const RingMatrix& g) { return g.determinant().num().is_zero(); }

}  // namespace

void check_braid_relations(const std::vector<RingMatrix>& gens) {
    for (size_t i = 0; i < gens.size(); ++i)
        if (is_singular(gens[i]))
            throw RelationFailure("generator " + std::to_string(i + 1) + " is not invertible");
    for (size_t i = 0; i < gens.size(); ++i) {
        for (size_t j = i + 2; j < gens.size(); ++j)
            if (!(gens[i] * gens[j] == gens[j] * gens[i]))
                throw RelationFailure("generators " + std::to_string(i + 1) + " and " +
                                      std::to_string(j + 1) + " do not commute");
        if (i + 1 < gens.size()) {
            RingMatrix lhs = gens[i] * gens[i + 1] * gens[i];
            RingMatrix rhs = gens[i + 1] * gens[i] * gens[i + 1];
            if (!(lhs == rhs))
                throw RelationFailure("braid relation between generators " +
                                      std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                                      " fails");
        }
    }
}

Representation burau_generators(long n) {
    if (n < 1) throw Error("burau_generators: n must be at least 1");
    auto vars = Vars::make({{"x", true}});
    RatFunc x = RatFunc::variable(vars, 0);
    RatFunc mx2 = RatFunc::constant(vars, -1) * x * x;
    Representation rep{"burau:" + std::to_string(n), static_cast<size_t>(n), vars, {}};
    for (long i = 0; i < n; ++i) {
        RingMatrix g = RingMatrix::identity(vars, static_cast<size_t>(n));
        if (i > 0) g.at(i, i - 1) = x;
        g.at(i, i) = mx2;
        if (i + 1 < n) g.at(i, i + 1) = x;
        rep.generators.push_back(std::move(g));
    }
    check_braid_relations(rep.generators);
    return rep;
}

RingMatrix squier_form(long n) {
    if (n < 1) throw Error("squier_form: n must be at least 1");
    auto vars = Vars::make({{"x", true}});
    RatFunc diag = RatFunc::variable(vars, 0) + RatFunc::variable(vars, 0, -1);
    RingMatrix j(vars, static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) {
        j.at(i, i) = diag;
        if (i + 1 < n) {
            j.at(i, i + 1) = rc(vars, -1);
            j.at(i + 1, i) = rc(vars, -1);
        }
    }
    return j;
}

RatFunc det_squier_closed_form(long n) {
    if (n < 1) throw Error("det_squier_closed_form: n must be at least 1");
    auto vars = Vars::make({{"x", true}});
    RatFunc x = RatFunc::variable(vars, 0);
    RatFunc num = RatFunc::variable(vars, 0, static_cast<int>(2 * n + 2)) - rc(vars, 1);
    RatFunc den = RatFunc::variable(vars, 0, static_cast<int>(n)) * (x * x - rc(vars, 1));
    RatFunc q = num / den;
    if (!q.den().is_one()) throw Error("det_squier_closed_form: division not exact");
    return q;
}

bool verify_det_formula(long n) {
    return squier_form(n).determinant() == det_squier_closed_form(n);
}

Representation bmw_b3_generators() {
    auto vars = Vars::make({{"l", true}, {"m", false}});
    auto e = [&](const char* s) { return parse_ratfunc(s, vars); };
    RingMatrix s1(vars, 3), s2(vars, 3);
    const char* rows1[3][3] = {{"l^-1", "m", "0"}, {"0", "m", "1"}, {"0", "-1", "0"}};
    const char* rows2[3][3] = {{"0", "0", "-1"}, {"0", "l^-1", "l^-1*m"}, {"1", "0", "m"}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            s1.at(i, j) = e(rows1[i][j]);
            s2.at(i, j) = e(rows2[i][j]);
        }
    Representation rep{"bmw-b3", 3, vars, {std::move(s1), std::move(s2)}};
    try {
        check_braid_relations(rep.generators);
    } catch (const RelationFailure& f) {
        throw FixtureInconsistent(std::string("bmw-b3 transcription: ") + f.what());
    }
    return rep;
}

RingMatrix bmw_b4_form() {
    auto vars = Vars::make({{"a", true}, {"L", true}});
    const char* diag[6] = {
        "2",
        "-2*a*(L^2+1)*(2*a^2*L - a*L^2 - a + 2*L) / ((a-L)^2 * (a*L-1)^2)",
        "2*(L^2+1)*(a^3+L)*(a^3*L+1) / (a*(a-L)*(a*L-1)*(2*a^2*L - a*L^2 - a + 2*L))",
        "2*(a+L)*(a^5*L^2 + a^4*L - a^3*L^2 - a^3 + a^2*L^3 + a^2*L - a*L^2 - L)"
        " / (a*(L^2+1)*(a^3+L)*(a*L-1))",
        "2*(a+L)*(a*L+1)*(a^3*L+1)*(2*a^3*L^2 + a^3 + a^2*L + a*L^2 + L^3 + 2*L)"
        " / (a*(L^2+1)*(a*L-1)*(a^5*L^2 + a^4*L - a^3*L^2 - a^3 + a^2*L^3 + a^2*L - a*L^2 - L))",
        "-2*(a^5-L)*(a+L)*(a*L+1)*(a^3*L+1)"
        " / (a^3*(a*L-1)*(2*a^3*L^2 + a^3 + a^2*L + a*L^2 + L^3 + 2*L))",
    };
    RingMatrix j(vars, 6);
    for (int i = 0; i < 6; ++i) j.at(i, i) = parse_ratfunc(diag[i], vars);
    return j;
}

RingMatrix jones_rect_form() {
    auto vars = Vars::make({{"q", true}});
    const char* rows[5][5] = {
        {"(1+q)^2/q", "-1-q", "2", "-1-q", "-1-q"},
        {"-(1+q)/q", "(1+q+q^2)/q", "-(1+q)/q", "1", "1"},
        {"2", "-1-q", "(1+q)^2/q", "-1-q", "-1-q"},
        {"-(1+q)/q", "1", "-(1+q)/q", "(1+q+q^2)/q", "1"},
        {"-(1+q)/q", "1", "-(1+q)/q", "1", "(1+q+q^2)/q"},
    };
    RingMatrix j(vars, 5);
    for (int i = 0; i < 5; ++i)
        for (int k = 0; k < 5; ++k) j.at(i, k) = parse_ratfunc(rows[i][k], vars);
    return j;
}

// ---------------------------------------------------------------- REPZ ----

namespace {

struct LineReader {
    std::vector<std::string> lines;
    size_t next = 0;

    explicit LineReader(const std::string& text) {
        std::istringstream in(text);
        std::string l;
        while (std::getline(in, l)) lines.push_back(l);
    }

    // Returns the next nonblank line and its 1-based number.
    std::optional<std::pair<std::string, int>> take() {
        while (next < lines.size()) {
            const std::string& l = lines[next];
            ++next;
            if (l.find_first_not_of(" \t\r") != std::string::npos)
                return std::make_pair(l, static_cast<int>(next));
        }
        return std::nullopt;
    }
};

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

// Parses one `;`-separated row into matrix row i.  Entries are padded with
// their column offset so parser errors report file positions.
void parse_row(const std::string& line, int line_no, const VarsPtr& vars, RingMatrix& m,
               size_t i) {
    size_t n = m.dim();
    std::vector<std::pair<std::string, size_t>> cells;
    size_t start = 0;
    for (;;) {
        size_t semi = line.find(';', start);
        cells.emplace_back(line.substr(start, semi == std::string::npos ? semi : semi - start),
                           start);
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    if (cells.size() != n)
        throw ParseError("expected " + std::to_string(n) + " entries, got " +
                             std::to_string(cells.size()),
                         line_no, 1);
    for (size_t j = 0; j < n; ++j)
        m.at(i, j) =
            parse_ratfunc(std::string(cells[j].second, ' ') + cells[j].first, vars, line_no);
}

}  // namespace

RepFile parse_repz(const std::string& text, const std::string& name, bool verify_relations) {
    LineReader rd(text);

    auto hdr = rd.take();
    if (!hdr) throw ParseError("missing 'dim' header", 1, 1);
    auto dim_tok = split_ws(hdr->first);
    if (dim_tok.size() != 2 || dim_tok[0] != "dim")
        throw ParseError("expected 'dim <n>'", hdr->second, 1);
    long n;
    try {
        n = std::stol(dim_tok[1]);
    } catch (const std::exception&) {
        throw ParseError("bad dimension '" + dim_tok[1] + "'", hdr->second, 1);
    }
    if (n < 1) throw ParseError("dimension must be at least 1", hdr->second, 1);

    auto vline = rd.take();
    if (!vline) throw ParseError("missing 'vars' header", hdr->second + 1, 1);
    auto vtok = split_ws(vline->first);
    if (vtok.empty() || vtok[0] != "vars")
        throw ParseError("expected 'vars <name>[!]...'", vline->second, 1);
    std::vector<Vars::Decl> decls;
    for (size_t i = 1; i < vtok.size(); ++i) {
        std::string v = vtok[i];
        bool inverted = !v.empty() && v.back() == '!';
        if (inverted) v.pop_back();
        if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
            throw ParseError("bad variable name '" + vtok[i] + "'", vline->second, 1);
        decls.push_back({v, inverted});
    }
    auto vars = Vars::make(std::move(decls));

    Representation rep{name, static_cast<size_t>(n), vars, {}};
    std::optional<RingMatrix> form;
    for (;;) {
        auto sect = rd.take();
        if (!sect) break;
        auto stok = split_ws(sect->first);
        bool is_gen = stok.size() == 2 && stok[0] == "gen";
        bool is_form = stok.size() == 1 && stok[0] == "form";
        if (!is_gen && !is_form)
            throw ParseError("expected 'gen <k>' or 'form'", sect->second, 1);
        if (is_gen) {
            long k;
            try {
                k = std::stol(stok[1]);
            } catch (const std::exception&) {
                throw ParseError("bad generator index '" + stok[1] + "'", sect->second, 1);
            }
            if (k != static_cast<long>(rep.generators.size()) + 1)
                throw ParseError("generator blocks must be numbered consecutively from 1",
                                 sect->second, 1);
        } else if (form) {
            throw ParseError("duplicate 'form' section", sect->second, 1);
        }
        RingMatrix m(vars, static_cast<size_t>(n));
        for (long i = 0; i < n; ++i) {
            auto row = rd.take();
            if (!row) throw ParseError("unexpected end of file inside matrix block",
                                       static_cast<int>(rd.lines.size()) + 1, 1);
            parse_row(row->first, row->second, vars, m, static_cast<size_t>(i));
        }
        if (is_gen)
            rep.generators.push_back(std::move(m));
        else
            form = std::move(m);
    }
    if (rep.generators.empty()) throw ParseError("no generator blocks", 1, 1);
    if (verify_relations) check_braid_relations(rep.generators);
    return RepFile{std::move(rep), std::move(form)};
}

RepFile load_representation(const std::string& path, bool verify_relations) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open representation file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_repz(buf.str(), path, verify_relations);
}

std::string save_representation(const Representation& rep, const RingMatrix* form) {
    std::ostringstream out;
    out << "dim " << rep.dim << "\n";
    out << "vars";
    for (size_t i = 0; i < rep.vars->size(); ++i)
        out << " " << rep.vars->name(i) << (rep.vars->inverted(i) ? "!" : "");
    out << "\n";
    auto emit = [&](const RingMatrix& m) {
        for (size_t i = 0; i < m.dim(); ++i) {
            for (size_t j = 0; j < m.dim(); ++j) out << (j ? "; " : "") << m.at(i, j).str();
            out << "\n";
        }
    };
    for (size_t k = 0; k < rep.generators.size(); ++k) {
        out << "gen " << (k + 1) << "\n";
        emit(rep.generators[k]);
    }
    if (form) {
        out << "form\n";
        emit(*form);
    }
    return out.str();
}

bool verify_invariance(const Representation& rep, const RingMatrix& J) {
    if (J.dim() != rep.dim)
        throw DimensionMismatch("verify_invariance: form dimension does not match");
    for (const auto& g : rep.generators) {
        require_same_vars(g.vars(), J.vars());
        if (!(g.star() * J * g == J)) return false;
    }
    return true;
}

}  // namespace salembraid

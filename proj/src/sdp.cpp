#include "copex/sdp.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace copex {

void SDPProblem::validate() const {
    const size_t nb = static_cast<size_t>(basis.size());
    if (objective.size() != nb)
        throw std::invalid_argument("objective length differs from basis size");
    for (const auto& block : blocks) {
        if (block.m.size() != nb)
            throw std::invalid_argument("type block has wrong basis dimension");
        const size_t dim = block.flags.size();
        for (const auto& mat : block.m) {
            if (mat.size() != dim)
                throw std::invalid_argument("product matrix has wrong dimension");
            for (size_t i = 0; i < dim; ++i) {
                if (mat[i].size() != dim)
                    throw std::invalid_argument("product matrix not square");
                for (size_t j = 0; j < i; ++j)
                    if (mat[i][j] != mat[j][i])
                        throw std::invalid_argument("product matrix not symmetric");
            }
        }
    }
    for (const auto& lc : linear)
        if (lc.coeffs.size() != nb)
            throw std::invalid_argument("linear constraint has wrong length");
}

TypeBlock build_type_block(const FlagType& type, int k, const Family& basis,
                           const ForbiddenSpec& admissible) {
    const int s = type.size();
    if ((k + s) % 2 != 0)
        throw std::invalid_argument("k and type size must have equal parity");
    const int nf = (k + s) / 2;
    TypeBlock block;
    block.type = type;
    block.flags = generate_flags(type, nf, admissible);
    const int dim = static_cast<int>(block.flags.size());
    block.m.resize(basis.size());
    for (int h = 0; h < basis.size(); ++h) {
        const RGraph& host = basis.members()[h];
        std::vector<std::vector<Rat>> mat(dim, std::vector<Rat>(dim, Rat(0)));
        long placements = 0;
        std::vector<int> tuple;
        std::vector<bool> used(host.vertex_count(), false);
        std::function<void()> rec = [&]() {
            if (static_cast<int>(tuple.size()) == s) {
                ++placements;
                if (!realizes_type(host, tuple, type)) return;
                auto v = flag_profile(block.flags, type, host, tuple);
                for (int i = 0; i < dim; ++i) {
                    if (v[i] == 0) continue;
                    for (int j = i; j < dim; ++j) mat[i][j] += v[i] * v[j];
                }
                return;
            }
            for (int w = 0; w < host.vertex_count(); ++w) {
                if (used[w]) continue;
                used[w] = true;
                tuple.push_back(w);
                rec();
                tuple.pop_back();
                used[w] = false;
            }
        };
        rec();
        for (int i = 0; i < dim; ++i)
            for (int j = i; j < dim; ++j) {
                if (placements > 0) mat[i][j] /= placements;
                mat[j][i] = mat[i][j];
            }
        block.m[h] = std::move(mat);
    }
    return block;
}

namespace {

// var indices: 0 = lambda, then each block's upper triangle row-major, then
// multipliers.
struct VarLayout {
    int nvars;
    std::vector<int> block_start;  // first var of block t's triangle
    int mult_start;

    static VarLayout of(const SDPProblem& p) {
        VarLayout l;
        int at = 1;
        for (const auto& b : p.blocks) {
            l.block_start.push_back(at);
            int d = static_cast<int>(b.flags.size());
            at += d * (d + 1) / 2;
        }
        l.mult_start = at;
        l.nvars = at + static_cast<int>(p.linear.size());
        return l;
    }
};

int triangle_index(int i, int j, int dim) {  // i <= j
    return i * dim - i * (i - 1) / 2 + (j - i);
}

struct Entry {
    int matno, blk, i, j;  // 1-based, per SDPA conventions
    Rat value;
};

// All nonzero F_i / F_0 entries of the encoding described in sdp.hpp.
std::vector<Entry> encode(const SDPProblem& p) {
    VarLayout layout = VarLayout::of(p);
    std::vector<Entry> entries;
    const int nb = p.basis.size();
    const int nblocks = static_cast<int>(p.blocks.size());
    const int mult_block = 2 + nblocks;
    for (int h = 0; h < nb; ++h) {
        // F_0 diagonal: -objective(H)
        if (p.objective[h] != 0)
            entries.push_back({0, 1, h + 1, h + 1, -p.objective[h]});
        // lambda coefficient
        entries.push_back({1, 1, h + 1, h + 1, Rat(-1)});
        for (int t = 0; t < nblocks; ++t) {
            const auto& mat = p.blocks[t].m[h];
            const int dim = static_cast<int>(p.blocks[t].flags.size());
            for (int i = 0; i < dim; ++i)
                for (int j = i; j < dim; ++j) {
                    Rat coeff = -mat[i][j];
                    if (i != j) coeff *= 2;
                    if (coeff == 0) continue;
                    int var = layout.block_start[t] + triangle_index(i, j, dim);
                    entries.push_back({var + 1, 1, h + 1, h + 1, coeff});
                }
        }
        for (size_t jc = 0; jc < p.linear.size(); ++jc) {
            if (p.linear[jc].coeffs[h] == 0) continue;
            entries.push_back({layout.mult_start + static_cast<int>(jc) + 1, 1,
                               h + 1, h + 1, -p.linear[jc].coeffs[h]});
        }
    }
    for (int t = 0; t < nblocks; ++t) {
        const int dim = static_cast<int>(p.blocks[t].flags.size());
        for (int i = 0; i < dim; ++i)
            for (int j = i; j < dim; ++j) {
                int var = layout.block_start[t] + triangle_index(i, j, dim);
                entries.push_back({var + 1, 2 + t, i + 1, j + 1, Rat(1)});
            }
    }
    for (size_t jc = 0; jc < p.linear.size(); ++jc)
        entries.push_back({layout.mult_start + static_cast<int>(jc) + 1, mult_block,
                           static_cast<int>(jc) + 1, static_cast<int>(jc) + 1, Rat(1)});
    return entries;
}

bool decimal_denominator(const mpz_class& den) {
    mpz_class d = den;
    for (int p : {2, 5})
        while (d % p == 0) d /= p;
    return d == 1;
}

std::string decimal_str(const Rat& x) {
    // exact decimal; caller guarantees denominator is 2^a 5^b
    mpz_class num = x.get_num(), den = x.get_den();
    int digits = 0;
    mpz_class d = den;
    while (d % 2 == 0) { d /= 2; ++digits; }
    int fives = 0;
    d = den;
    while (d % 5 == 0) { d /= 5; ++fives; }
    digits = std::max(digits, fives);
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    mpz_class scaled = num * (scale / den);
    bool neg = scaled < 0;
    mpz_class mag = neg ? mpz_class(-scaled) : scaled;
    std::string s = mag.get_str();
    if (digits == 0) return (neg ? "-" : "") + s;
    while (static_cast<int>(s.size()) <= digits) s.insert(s.begin(), '0');
    s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

}  // namespace

void export_sdpa(const SDPProblem& p, std::ostream& os) {
    p.validate();
    VarLayout layout = VarLayout::of(p);
    auto entries = encode(p);

    mpz_class scale = 1;
    bool all_decimal = true;
    for (const auto& e : entries)
        if (!decimal_denominator(e.value.get_den())) all_decimal = false;
    if (!all_decimal) {
        for (const auto& e : entries)
            scale = lcm(scale, e.value.get_den());
    }

    os << "\"positive co-degree flag relaxation; vars: lambda";
    for (size_t t = 0; t < p.blocks.size(); ++t)
        os << ", Q" << t << " upper triangle (dim " << p.blocks[t].flags.size() << ")";
    if (!p.linear.empty()) os << ", " << p.linear.size() << " multipliers";
    os << "\n";
    if (scale != 1) os << "*scale " << scale.get_str() << "\n";
    for (int h = 0; h < p.basis.size(); ++h) {
        const RGraph& g = p.basis.members()[h];
        os << "*member " << h << ' ' << g.uniformity() << ' ' << g.vertex_count();
        for (const auto& e : g.edges()) {
            os << ' ';
            for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
        }
        os << "\n";
    }
    os << layout.nvars << " = mDIM\n";
    int nblocks = 1 + static_cast<int>(p.blocks.size()) + (p.linear.empty() ? 0 : 1);
    os << nblocks << " = nBLOCK\n";
    os << -p.basis.size();
    for (const auto& b : p.blocks) os << ' ' << b.flags.size();
    if (!p.linear.empty()) os << ' ' << -static_cast<int>(p.linear.size());
    os << " = bLOCKsTRUCT\n";
    // objective c: minimize -lambda
    for (int v = 0; v < layout.nvars; ++v) os << (v ? " " : "") << (v == 0 ? "-1" : "0");
    os << '\n';
    for (const auto& e : entries) {
        Rat v = e.value * Rat(scale);
        os << e.matno << ' ' << e.blk << ' ' << e.i << ' ' << e.j << ' '
           << decimal_str(v) << '\n';
    }
}

void export_sdpa_file(const SDPProblem& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write SDPA file: " + path);
    export_sdpa(p, out);
}

bool AssembledSDP::operator==(const AssembledSDP& o) const {
    if (!(basis_size == o.basis_size && objective == o.objective &&
          block_dims == o.block_dims && m == o.m && linear == o.linear))
        return false;
    if (!basis_graphs.empty() && !o.basis_graphs.empty())
        return basis_graphs == o.basis_graphs;
    return true;
}

AssembledSDP to_assembled(const SDPProblem& p) {
    p.validate();
    AssembledSDP a;
    a.basis_size = p.basis.size();
    a.objective = p.objective;
    for (const auto& b : p.blocks) {
        a.block_dims.push_back(static_cast<int>(b.flags.size()));
        a.m.push_back(b.m);
    }
    for (const auto& lc : p.linear) a.linear.push_back(lc.coeffs);
    a.basis_graphs = p.basis.members();
    return a;
}

namespace {

Rat parse_decimal(const std::string& tok) {
    auto dot = tok.find('.');
    if (dot == std::string::npos) return rat_parse(tok);
    std::string digits = tok.substr(0, dot) + tok.substr(dot + 1);
    int frac = static_cast<int>(tok.size() - dot - 1);
    mpz_class den = 1;
    for (int i = 0; i < frac; ++i) den *= 10;
    bool neg = !digits.empty() && digits[0] == '-';
    if (neg) digits = digits.substr(1);
    Rat v(mpz_class(digits, 10), den);
    v.canonicalize();
    return neg ? Rat(-v) : v;
}

}  // namespace

AssembledSDP parse_sdpa(std::istream& is) {
    std::string line;
    std::vector<std::string> member_lines;
    mpz_class scale = 1;
    int mdim = -1, nblock = -1;
    std::vector<int> blockstruct;
    std::vector<Entry> entries;
    bool have_c = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '"' || line[0] == '*') {
            if (line.rfind("*scale ", 0) == 0) scale = mpz_class(line.substr(7), 10);
            if (line.rfind("*member ", 0) == 0) member_lines.push_back(line.substr(8));
            continue;
        }
        std::istringstream ss(line);
        if (mdim < 0) {
            ss >> mdim;
        } else if (nblock < 0) {
            ss >> nblock;
        } else if (blockstruct.empty()) {
            int b;
            while (ss >> b) blockstruct.push_back(b);
            if (static_cast<int>(blockstruct.size()) != nblock)
                throw std::runtime_error("bad bLOCKsTRUCT line");
        } else if (!have_c) {
            have_c = true;  // objective vector; fixed by convention
        } else {
            Entry e;
            std::string val;
            if (!(ss >> e.matno >> e.blk >> e.i >> e.j >> val))
                throw std::runtime_error("bad SDPA entry: " + line);
            e.value = parse_decimal(val) / Rat(scale);
            entries.push_back(std::move(e));
        }
    }
    if (mdim < 0 || blockstruct.empty())
        throw std::runtime_error("truncated SDPA file");
    if (blockstruct[0] >= 0)
        throw std::runtime_error("expected a leading diagonal slack block");

    AssembledSDP a;
    a.basis_size = -blockstruct[0];
    bool has_mult = nblock >= 2 && blockstruct[nblock - 1] < 0;
    int ntypes = nblock - 1 - (has_mult ? 1 : 0);
    for (int t = 0; t < ntypes; ++t) {
        int dim = blockstruct[1 + t];
        if (dim <= 0) throw std::runtime_error("unexpected diagonal type block");
        a.block_dims.push_back(dim);
        a.m.emplace_back(a.basis_size,
                         std::vector<std::vector<Rat>>(dim, std::vector<Rat>(dim, Rat(0))));
    }
    int nmult = has_mult ? -blockstruct[nblock - 1] : 0;
    a.linear.assign(nmult, std::vector<Rat>(a.basis_size, Rat(0)));
    a.objective.assign(a.basis_size, Rat(0));

    // Recover the variable layout from the type-block unit entries.
    std::vector<int> block_start(ntypes, 0);
    int at = 1;
    for (int t = 0; t < ntypes; ++t) {
        block_start[t] = at;
        at += a.block_dims[t] * (a.block_dims[t] + 1) / 2;
    }
    int mult_start = at;

    for (const auto& text : member_lines) {
        std::istringstream ms(text);
        int idx, r, n;
        ms >> idx >> r >> n;
        std::vector<Edge> edges;
        std::string tok;
        while (ms >> tok) {
            Edge e;
            std::istringstream es(tok);
            std::string v;
            while (std::getline(es, v, ',')) e.push_back(std::stoi(v));
            edges.push_back(std::move(e));
        }
        a.basis_graphs.push_back(RGraph(r, n, std::move(edges)));
    }
    if (!a.basis_graphs.empty() &&
        static_cast<int>(a.basis_graphs.size()) != a.basis_size)
        throw std::runtime_error("member comments disagree with the slack block size");

    for (const auto& e : entries) {
        if (e.blk == 1) {
            int h = e.i - 1;
            if (e.i != e.j || h < 0 || h >= a.basis_size)
                throw std::runtime_error("off-diagonal entry in slack block");
            if (e.matno == 0) {
                a.objective[h] = -e.value;
            } else if (e.matno == 1) {
                if (e.value != -1) throw std::runtime_error("unexpected lambda coefficient");
            } else if (e.matno - 1 >= mult_start) {
                a.linear[e.matno - 1 - mult_start][h] = -e.value;
            } else {
                int var = e.matno - 1;
                int t = ntypes - 1;
                while (t > 0 && block_start[t] > var) --t;
                int off = var - block_start[t];
                int dim = a.block_dims[t];
                int i = 0;
                while (off >= dim - i) {
                    off -= dim - i;
                    ++i;
                }
                int j = i + off;
                Rat val = -e.value;
                if (i != j) val /= 2;
                a.m[t][h][i][j] = val;
                a.m[t][h][j][i] = val;
            }
        }
        // Entries in type/multiplier blocks are structural units; skipped.
    }
    return a;
}

AssembledSDP parse_sdpa_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open SDPA file: " + path);
    return parse_sdpa(in);
}

}  // namespace copex

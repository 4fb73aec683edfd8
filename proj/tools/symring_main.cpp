// symring: exact Wedderburn calculus for the rational symmetric-group
// algebra, with tensor symmetry classes, contraction spaces, and linear
// identities on top. All arithmetic is exact; all output is deterministic.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "symring/block_algebra.hpp"
#include "symring/characters.hpp"
#include "symring/dft.hpp"
#include "symring/error.hpp"
#include "symring/group_ring.hpp"
#include "symring/identities.hpp"
#include "symring/ideal_decomp.hpp"
#include "symring/io.hpp"
#include "symring/matrix.hpp"
#include "symring/partition.hpp"
#include "symring/permutation.hpp"
#include "symring/rational.hpp"
#include "symring/tensor.hpp"

using Json = nlohmann::ordered_json;
using namespace symring;

namespace {

struct GlobalOpts {
    bool json = false;
    bool force = false;
    int guard = kDegreeGuard;

    /// Guard handed to enumerating code: --force admits the actual degree.
    int guard_for(int degree) const { return force ? std::max(degree, guard) : guard; }

    void check_degree(int degree, const std::string& what) const {
        if (!force && degree > guard)
            throw GuardError(what + " has degree " + std::to_string(degree) +
                             " above the guard " + std::to_string(guard) +
                             "; pass --force to proceed");
    }
};

std::string ptext(const Partition& p) { return "[" + p.str() + "]"; }

Partition parse_partition_arg(std::string text) {
    if (text.size() >= 2 && text.front() == '[' && text.back() == ']')
        text = text.substr(1, text.size() - 2);
    return parse_partition(text);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::string spaced = text;
    std::replace(spaced.begin(), spaced.end(), ',', ' ');
    std::istringstream in(spaced);
    std::vector<int> out;
    for (std::string tok; in >> tok;) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw Error("malformed integer list entry '" + tok + "'");
        out.push_back(value);
    }
    return out;
}

/// Largest partitions first, coefficient prefixes only when not 1:
/// "[4] + [2,2]", "2[3,1]". The zero multiset prints "0".
std::string expansion_text(const SchurExpansion& m) {
    if (m.empty()) return "0";
    std::string out;
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        if (!out.empty()) out += " + ";
        if (it->second != 1) out += std::to_string(it->second);
        out += ptext(it->first);
    }
    return out;
}

Json expansion_json(const SchurExpansion& m) {
    Json arr = Json::array();
    for (auto it = m.rbegin(); it != m.rend(); ++it)
        arr.push_back({{"partition", ptext(it->first)}, {"multiplicity", it->second}});
    return arr;
}

Json images_json(const Permutation& p) {
    Json arr = Json::array();
    for (int k = 1; k <= p.degree(); ++k) arr.push_back(p(k));
    return arr;
}

Json terms_json(const std::map<Permutation, Rational>& terms) {
    Json arr = Json::array();
    for (const auto& [p, c] : terms)
        arr.push_back({{"coefficient", to_string(c)}, {"images", images_json(p)}});
    return arr;
}

Json element_json(const GroupRingElement& a) { return terms_json(a.terms()); }

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

void append_stanza(std::string& out, const std::string& title, const GroupRingElement& a) {
    out += "# " + title + "\n";
    out += element_lines(a);
}

// ---------------------------------------------------------------------------
// chartable

void run_chartable(int r, const GlobalOpts& g) {
    if (r < 1) throw Error("r must be at least 1");
    g.check_degree(r, "the character table");
    const CharacterTable table = character_table(r);
    if (g.json) {
        Json doc;
        doc["r"] = r;
        Json classes = Json::array(), sizes = Json::array(), rows = Json::array();
        for (const auto& c : table.column_types) classes.push_back(ptext(c));
        for (long long s : table.class_sizes) sizes.push_back(s);
        for (std::size_t i = 0; i < table.row_partitions.size(); ++i) {
            Json row;
            row["partition"] = ptext(table.row_partitions[i]);
            row["values"] = table.values[i];
            rows.push_back(std::move(row));
        }
        doc["classes"] = std::move(classes);
        doc["class_sizes"] = std::move(sizes);
        doc["rows"] = std::move(rows);
        emit(doc);
        return;
    }
    std::string out = "class";
    for (const auto& c : table.column_types) out += '\t' + ptext(c);
    out += '\n';
    for (std::size_t i = 0; i < table.row_partitions.size(); ++i) {
        out += ptext(table.row_partitions[i]);
        for (long long v : table.values[i]) out += '\t' + std::to_string(v);
        out += '\n';
    }
    std::cout << out;
}

// ---------------------------------------------------------------------------
// lr / plethysm

void run_expansion(const SchurExpansion& m, const GlobalOpts& g) {
    if (g.json) {
        Json doc;
        doc["terms"] = expansion_json(m);
        emit(doc);
    } else {
        std::cout << expansion_text(m) << '\n';
    }
}

// ---------------------------------------------------------------------------
// dft

void run_dft_forward(const std::string& path, const GlobalOpts& g) {
    const GroupRingElement a = read_element_file(path);
    const NaturalRepCache cache(a.degree(), g.guard_for(a.degree()));
    const BlockAlgebraElement hat = fourier(a, cache);
    if (g.json) {
        Json doc;
        doc["r"] = a.degree();
        Json blocks = Json::array();
        for (const auto& [b, mat] : hat.stored_blocks()) {
            Json rows = Json::array();
            for (std::size_t i = 0; i < mat.rows(); ++i) {
                Json row = Json::array();
                for (std::size_t j = 0; j < mat.cols(); ++j) row.push_back(to_string(mat.at(i, j)));
                rows.push_back(std::move(row));
            }
            blocks.push_back({{"partition", ptext(hat.shape().label(b))}, {"rows", std::move(rows)}});
        }
        doc["blocks"] = std::move(blocks);
        emit(doc);
        return;
    }
    std::string out = "r=" + std::to_string(a.degree()) + '\n';
    for (const auto& [b, mat] : hat.stored_blocks()) {
        out += ptext(hat.shape().label(b)) + '\n';
        for (std::size_t i = 0; i < mat.rows(); ++i) {
            for (std::size_t j = 0; j < mat.cols(); ++j) {
                if (j > 0) out += ' ';
                out += to_string(mat.at(i, j));
            }
            out += '\n';
        }
    }
    std::cout << out;
}

/// Reads the text block format emitted by the forward transform: "r=<r>",
/// then per block a "[parts]" label line and dim x dim fraction entries.
BlockAlgebraElement read_block_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(path + ": cannot open file");
    std::vector<std::string> toks;
    for (std::string line; std::getline(in, line);) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        for (std::string tok; ls >> tok;) toks.push_back(tok);
    }
    if (toks.empty() || toks[0].rfind("r=", 0) != 0)
        throw Error(path + ": expected 'r=<r>' header");
    int r = 0;
    try {
        std::size_t used = 0;
        r = std::stoi(toks[0].substr(2), &used);
        if (used != toks[0].size() - 2) throw Error("");
    } catch (const std::exception&) {
        throw Error(path + ": malformed header '" + toks[0] + "'");
    }
    if (r < 1) throw Error(path + ": r must be at least 1");
    auto shape = BlockShape::of(r);
    BlockAlgebraElement out(shape);
    std::set<std::size_t> seen;
    std::size_t i = 1;
    while (i < toks.size()) {
        const std::string& label_tok = toks[i];
        if (label_tok.size() < 2 || label_tok.front() != '[' || label_tok.back() != ']')
            throw Error(path + ": expected a '[parts]' block label, got '" + label_tok + "'");
        const Partition label = parse_partition(label_tok.substr(1, label_tok.size() - 2));
        const std::size_t b = shape->index_of(label);
        if (!seen.insert(b).second) throw Error(path + ": duplicate block " + label_tok);
        const std::size_t dim = shape->dim(b);
        QMatrix mat(dim, dim);
        ++i;
        for (std::size_t row = 0; row < dim; ++row) {
            for (std::size_t col = 0; col < dim; ++col) {
                if (i >= toks.size())
                    throw Error(path + ": block " + label_tok + " is missing entries");
                mat.at(row, col) = parse_rational(toks[i++]);
            }
        }
        out.set_block(b, std::move(mat));
    }
    return out;
}

void run_dft_inverse(const std::string& path, const GlobalOpts& g) {
    const BlockAlgebraElement hat = read_block_file(path);
    const NaturalRepCache cache(hat.degree(), g.guard_for(hat.degree()));
    const GroupRingElement a = inverse_fourier(hat, cache);
    if (g.json) {
        Json doc;
        doc["r"] = a.degree();
        doc["terms"] = element_json(a);
        emit(doc);
    } else {
        std::cout << element_lines(a);
    }
}

// ---------------------------------------------------------------------------
// decompose / symclass

std::string component_table(const DecompositionResult& res, const BlockShape& shape) {
    std::string out = "k\tlambda\tdim\tseed_block\tseed_row\tseed_gen\n";
    for (std::size_t k = 0; k < res.labels.size(); ++k) {
        out += std::to_string(k + 1);
        out += '\t' + ptext(res.labels[k]);
        out += '\t' + std::to_string(dimension(res.labels[k]));
        out += '\t' + ptext(shape.label(res.seeds[k].block));
        out += '\t' + std::to_string(res.seeds[k].row);
        out += '\t' + std::to_string(res.seeds[k].generator);
        out += '\n';
    }
    return out;
}

Json components_json(const DecompositionResult& res, const BlockShape& shape) {
    Json arr = Json::array();
    for (std::size_t k = 0; k < res.labels.size(); ++k) {
        Json c;
        c["k"] = k + 1;
        c["partition"] = ptext(res.labels[k]);
        c["dim"] = dimension(res.labels[k]);
        c["seed"] = {{"block", ptext(shape.label(res.seeds[k].block))},
                     {"row", res.seeds[k].row},
                     {"generator", res.seeds[k].generator}};
        c["idempotent"] = element_json(res.ring_idempotents[k]);
        arr.push_back(std::move(c));
    }
    return arr;
}

void run_decompose(const std::string& path, const std::string& side_name, bool use_mult,
                   const GlobalOpts& g) {
    const GroupRingElement a = read_element_file(path);
    const NaturalRepCache cache(a.degree(), g.guard_for(a.degree()));
    const Side side = side_name == "right" ? Side::Right : Side::Left;
    std::optional<MultiplicityBounds> bounds;
    if (use_mult) bounds = ideal_multiplicities({fourier(a, cache)}, side);
    const DecompositionResult res = decompose(std::vector<GroupRingElement>{a}, side, cache, bounds);
    if (g.json) {
        Json doc;
        doc["r"] = a.degree();
        doc["side"] = side_name;
        doc["count"] = res.labels.size();
        doc["dimension"] = res.ideal_dimension();
        doc["seed_inspections"] = res.seed_inspections;
        doc["components"] = components_json(res, cache.shape());
        doc["total"] = element_json(*res.total_ring);
        emit(doc);
        return;
    }
    std::string out = "r=" + std::to_string(a.degree()) + '\n';
    out += "side: " + side_name + '\n';
    out += "idempotents: " + std::to_string(res.labels.size()) + '\n';
    out += "dimension: " + std::to_string(res.ideal_dimension()) + '\n';
    out += component_table(res, cache.shape());
    for (std::size_t k = 0; k < res.ring_idempotents.size(); ++k)
        append_stanza(out, "h_" + std::to_string(k + 1), res.ring_idempotents[k]);
    std::cout << out;
}

void run_symclass(const std::string& path, const GlobalOpts& g) {
    const SymmetrySpec spec = read_symmetry_file(path);
    g.check_degree(spec.r, "the symmetry spec");
    const NaturalRepCache cache(spec.r, g.guard_for(spec.r));
    const SymmetryIdeal ideal = symmetry_ideal_from_identities(spec.generators, cache);
    const SchurExpansion multiset = ideal.components.label_multiset();
    if (g.json) {
        Json doc;
        doc["r"] = spec.r;
        doc["empty"] = ideal.empty_class;
        doc["dimension"] = ideal.components.ideal_dimension();
        doc["constituents"] = expansion_json(multiset);
        doc["idempotent"] = element_json(ideal.idempotent);
        doc["components"] = components_json(ideal.components, cache.shape());
        emit(doc);
        return;
    }
    std::string out = "r=" + std::to_string(spec.r) + '\n';
    out += std::string("empty: ") + (ideal.empty_class ? "yes" : "no") + '\n';
    out += "dimension: " + std::to_string(ideal.components.ideal_dimension()) + '\n';
    out += "constituents: " + expansion_text(multiset) + '\n';
    out += component_table(ideal.components, cache.shape());
    append_stanza(out, "e", ideal.idempotent);
    for (std::size_t k = 0; k < ideal.components.ring_idempotents.size(); ++k)
        append_stanza(out, "h_" + std::to_string(k + 1), ideal.components.ring_idempotents[k]);
    std::cout << out;
}

// ---------------------------------------------------------------------------
// wspace / identities / reduce

struct ClassSource {
    std::string elem_path;
    std::string sym_path;

    /// The generating idempotent e of the class ideal (all T_b of class
    /// members lie in algebra*e); the tensor-side projector is star(e).
    GroupRingElement load(const GlobalOpts& g, std::unique_ptr<NaturalRepCache>& cache) const {
        if (elem_path.empty() == sym_path.empty())
            throw Error("exactly one of ELEMFILE and --symmetry is required");
        if (!elem_path.empty()) {
            GroupRingElement e = read_element_file(elem_path);
            cache = std::make_unique<NaturalRepCache>(e.degree(), g.guard_for(e.degree()));
            return e;
        }
        const SymmetrySpec spec = read_symmetry_file(sym_path);
        g.check_degree(spec.r, "the symmetry spec");
        cache = std::make_unique<NaturalRepCache>(spec.r, g.guard_for(spec.r));
        return symmetry_ideal_from_identities(spec.generators, *cache).idempotent;
    }
};

struct ContractionOpts {
    int l = 0;
    std::string b0_text;
    std::string mode_name = "universal";
    int d = 0;
    std::string signature_text;

    bool requested() const { return l > 0; }
    ContractionMode mode() const {
        return mode_name == "dim-limited" ? ContractionMode::DimLimited
                                          : ContractionMode::Universal;
    }

    ContractionSpec spec(int r) const {
        ContractionSpec s;
        s.r = r;
        s.l = l;
        s.b0 = parse_int_list(b0_text);
        if (s.l < 1) throw Error("-l must be at least 1");
        if (2 * s.l > r) throw Error("2*l exceeds r");
        if (static_cast<int>(s.b0.size()) != r - 2 * s.l)
            throw Error("--b0 needs exactly " + std::to_string(r - 2 * s.l) + " entries, got " +
                        std::to_string(s.b0.size()));
        return s;
    }

    std::optional<MetricSignature> signature() const {
        if (!signature_text.empty()) {
            if (d > 0) throw Error("pass only one of -d and --signature");
            return parse_signature(signature_text);
        }
        if (d > 0) return MetricSignature::euclidean(d);
        return std::nullopt;
    }
};

/// The left ideal algebra*a in block-factored form: per block the full
/// column space against the row span of the transform of a.
FactoredSubspace left_ideal_subspace(const BlockAlgebraElement& hat) {
    FactoredSubspace w;
    w.shape = hat.shape_ptr();
    for (const auto& [b, mat] : hat.stored_blocks()) {
        QMatrix r = row_basis(mat);
        if (r.rows() == 0) continue;
        w.factors.emplace(b, std::pair{QMatrix::identity(mat.rows()), std::move(r)});
    }
    return w;
}

FactoredSubspace w_subspace(const GroupRingElement& e, const ContractionOpts& c,
                            const NaturalRepCache& cache) {
    const BlockAlgebraElement hat = fourier(e, cache);
    if (!c.requested()) {
        if (c.mode_name == "dim-limited")
            throw Error("--mode dim-limited needs a contraction (-l)");
        return left_ideal_subspace(hat);
    }
    if (c.mode() == ContractionMode::Universal)
        return contraction_space_universal(hat, c.l, cache);
    const auto g = c.signature();
    if (!g) throw Error("dim-limited mode needs -d or --signature");
    const ContractionSpec spec = c.spec(e.degree());
    spec.validate(g->dim());
    return contraction_space_dim_limited(hat, spec, *g, cache);
}

std::vector<Permutation> load_candidates(const std::string& path, int r, const GlobalOpts& g) {
    if (path.empty()) return enumerate_sym_group(r, g.guard_for(r));
    const GroupRingElement listed = read_element_file(path);
    if (listed.degree() != r)
        throw Error(path + ": candidate degree " + std::to_string(listed.degree()) +
                    " does not match r=" + std::to_string(r));
    std::vector<Permutation> out;
    out.reserve(listed.terms().size());
    for (const auto& [p, c] : listed.terms()) out.push_back(p);
    return out;
}

void run_wspace(const ClassSource& src, const ContractionOpts& c, const GlobalOpts& g) {
    std::unique_ptr<NaturalRepCache> cache;
    const GroupRingElement e = src.load(g, cache);
    if (!c.requested()) throw Error("wspace needs a contraction (-l)");
    ContractionSpec spec;
    spec.r = e.degree();
    spec.l = c.l;
    std::optional<MetricSignature> sig;
    if (c.mode() == ContractionMode::DimLimited) {
        sig = c.signature();
        if (!sig) throw Error("dim-limited mode needs -d or --signature");
        spec = c.spec(e.degree());
        spec.validate(sig->dim());
    } else if (2 * c.l > e.degree()) {
        throw Error("2*l exceeds r");
    }
    const std::vector<GroupRingElement> basis = contraction_space(e, spec, c.mode(), sig, *cache);
    if (g.json) {
        Json doc;
        doc["r"] = e.degree();
        doc["l"] = c.l;
        doc["mode"] = c.mode_name;
        if (c.mode() == ContractionMode::DimLimited) doc["b0"] = spec.b0;
        doc["dim"] = basis.size();
        Json arr = Json::array();
        for (const auto& w : basis) arr.push_back(element_json(w));
        doc["basis"] = std::move(arr);
        emit(doc);
        return;
    }
    std::string out = "r=" + std::to_string(e.degree()) + " l=" + std::to_string(c.l);
    if (c.mode() == ContractionMode::DimLimited && !spec.b0.empty()) {
        out += " b0=";
        for (std::size_t k = 0; k < spec.b0.size(); ++k) {
            if (k > 0) out += ',';
            out += std::to_string(spec.b0[k]);
        }
    }
    out += '\n';
    out += "mode: " + c.mode_name + '\n';
    out += "dim: " + std::to_string(basis.size()) + '\n';
    for (std::size_t k = 0; k < basis.size(); ++k)
        append_stanza(out, "w_" + std::to_string(k + 1), basis[k]);
    std::cout << out;
}

void run_identities(const ClassSource& src, const ContractionOpts& c,
                    const std::string& candidates_path, const GlobalOpts& g) {
    std::unique_ptr<NaturalRepCache> cache;
    const GroupRingElement e = src.load(g, cache);
    const FactoredSubspace w = w_subspace(e, c, *cache);
    const IdentityBasis ids =
        orthogonal_identities(w, load_candidates(candidates_path, e.degree(), g), *cache);
    if (g.json) {
        Json doc;
        doc["r"] = e.degree();
        doc["candidates"] = ids.candidates.size();
        doc["w_rank"] = ids.w_rank;
        Json arr = Json::array();
        for (const auto& vec : ids.vectors) {
            Json one = Json::array();
            for (std::size_t k = 0; k < ids.candidates.size(); ++k) {
                if (vec[k] == 0) continue;
                one.push_back({{"coefficient", to_string(vec[k])},
                               {"images", images_json(ids.candidates[k])}});
            }
            arr.push_back(std::move(one));
        }
        doc["identities"] = std::move(arr);
        emit(doc);
        return;
    }
    std::cout << identity_stanzas(ids);
}

void run_reduce(const std::string& expr_path, const ClassSource& src, const ContractionOpts& c_in,
                const std::string& candidates_path, const GlobalOpts& g) {
    const Expression tau = read_expression_file(expr_path);
    g.check_degree(tau.r, "the expression");
    std::unique_ptr<NaturalRepCache> cache;
    const GroupRingElement e = src.load(g, cache);
    if (e.degree() != tau.r)
        throw Error("class degree " + std::to_string(e.degree()) +
                    " does not match the expression's r=" + std::to_string(tau.r));
    ContractionOpts c = c_in;
    if (tau.contraction) {
        c.l = tau.contraction->l;
        std::string b0;
        for (int v : tau.contraction->b0) b0 += (b0.empty() ? "" : ",") + std::to_string(v);
        c.b0_text = b0;
    } else if (c_in.requested()) {
        throw Error("-l belongs in the expression header, not on reduce");
    }
    const FactoredSubspace w = w_subspace(e, c, *cache);
    const IdentityBasis ids =
        orthogonal_identities(w, load_candidates(candidates_path, tau.r, g), *cache);
    const Expression reduced = reduce_expression(tau, ids);
    if (g.json) {
        Json doc;
        doc["r"] = reduced.r;
        if (reduced.contraction) {
            doc["l"] = reduced.contraction->l;
            doc["b0"] = reduced.contraction->b0;
        }
        doc["w_rank"] = ids.w_rank;
        doc["terms"] = terms_json(reduced.terms);
        emit(doc);
        return;
    }
    std::cout << expression_lines(reduced);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact ideal decompositions and tensor normal forms over rational "
                 "symmetric-group algebras"};
    app.require_subcommand(1);
    GlobalOpts global;
    app.add_flag("--json", global.json, "Emit a JSON document instead of text");
    app.add_flag("--force", global.force, "Lift the degree guard for this run");
    app.add_option("--guard", global.guard, "Largest degree enumerated without --force")
        ->capture_default_str();

    int chartable_r = 0;
    auto* chartable = app.add_subcommand("chartable", "Character table of one symmetric group");
    chartable->add_option("r", chartable_r, "Degree")->required();
    chartable->fallthrough();
    chartable->callback([&] { run_chartable(chartable_r, global); });

    std::string lr_alpha, lr_beta;
    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson product of two partitions");
    lr->add_option("alpha", lr_alpha, "First partition, e.g. 2,1")->required();
    lr->add_option("beta", lr_beta, "Second partition")->required();
    lr->fallthrough();
    lr->callback([&] {
        run_expansion(lr_product(parse_partition_arg(lr_alpha), parse_partition_arg(lr_beta)),
                      global);
    });

    std::string pl_alpha;
    int pl_n = 0;
    auto* plethysm = app.add_subcommand("plethysm", "Symmetrized power of a partition");
    plethysm->add_option("alpha", pl_alpha, "Base partition")->required();
    plethysm->add_option("-n,--power", pl_n, "Number of identical factors")->required();
    plethysm->fallthrough();
    plethysm->callback([&] {
        if (pl_n < 0) throw Error("-n cannot be negative");
        run_expansion(plethysm_sym_power(parse_partition_arg(pl_alpha), pl_n), global);
    });

    std::string dft_path;
    bool dft_inverse = false;
    auto* dft = app.add_subcommand("dft", "Block transform of a group-ring element");
    dft->add_option("file", dft_path, "Element file (block file with --inverse)")->required();
    dft->add_flag("--inverse", dft_inverse, "Read blocks, print the element");
    dft->fallthrough();
    dft->callback([&] {
        if (dft_inverse)
            run_dft_inverse(dft_path, global);
        else
            run_dft_forward(dft_path, global);
    });

    std::string dec_path, dec_side = "left";
    bool dec_mult = false;
    auto* dec = app.add_subcommand("decompose", "Split an ideal into minimal ideals");
    dec->add_option("file", dec_path, "Element file of the generator")->required();
    dec->add_option("--side", dec_side, "Which ideal the element generates")
        ->check(CLI::IsMember({"left", "right"}))
        ->capture_default_str();
    dec->add_flag("--use-multiplicities", dec_mult,
                  "Stop seeding a block once its multiplicity is reached");
    dec->fallthrough();
    dec->callback([&] { run_decompose(dec_path, dec_side, dec_mult, global); });

    std::string sym_path;
    auto* symclass = app.add_subcommand("symclass",
                                        "Class ideal of a system of linear tensor identities");
    symclass->add_option("file", sym_path, "Symmetry spec file")->required();
    symclass->fallthrough();
    symclass->callback([&] { run_symclass(sym_path, global); });

    auto add_source = [](CLI::App* cmd, ClassSource& src) {
        cmd->add_option("file", src.elem_path, "Element file of the class ideal's idempotent");
        cmd->add_option("--symmetry", src.sym_path, "Symmetry spec file defining the class");
    };
    auto add_contraction = [](CLI::App* cmd, ContractionOpts& c, bool with_l) {
        if (with_l) cmd->add_option("-l,--pairs", c.l, "Number of contracted index pairs");
        cmd->add_option("--b0", c.b0_text, "Fixed 0-based basis indices of the free slots");
        cmd->add_option("--mode", c.mode_name, "Contraction-space flavor")
            ->check(CLI::IsMember({"universal", "dim-limited"}))
            ->capture_default_str();
        cmd->add_option("-d,--dim", c.d, "Base dimension (euclidean signature)");
        cmd->add_option("--signature", c.signature_text, "Metric signature, e.g. +,+,+,-");
    };

    ClassSource wspace_src;
    ContractionOpts wspace_c;
    auto* wspace = app.add_subcommand("wspace", "Basis of the contraction subspace of a class");
    add_source(wspace, wspace_src);
    add_contraction(wspace, wspace_c, true);
    wspace->fallthrough();
    wspace->callback([&] { run_wspace(wspace_src, wspace_c, global); });

    ClassSource ident_src;
    ContractionOpts ident_c;
    std::string ident_candidates;
    auto* ident = app.add_subcommand("identities",
                                     "Linear identities of a class on a candidate set");
    add_source(ident, ident_src);
    add_contraction(ident, ident_c, true);
    ident->add_option("--candidates", ident_candidates,
                      "Element file listing the candidate permutations (default: all of S_r)");
    ident->fallthrough();
    ident->callback([&] { run_identities(ident_src, ident_c, ident_candidates, global); });

    std::string reduce_path, reduce_candidates;
    ClassSource reduce_src;
    ContractionOpts reduce_c;
    auto* reduce = app.add_subcommand("reduce", "Normal form of an expression modulo identities");
    reduce->add_option("file", reduce_path, "Expression file")->required();
    reduce->add_option("--symmetry", reduce_src.sym_path, "Symmetry spec file defining the class");
    reduce->add_option("--idempotent", reduce_src.elem_path,
                       "Element file of the class ideal's idempotent");
    add_contraction(reduce, reduce_c, false);
    reduce->add_option("--candidates", reduce_candidates,
                       "Element file listing the candidate permutations (default: all of S_r)");
    reduce->fallthrough();
    reduce->callback(
        [&] { run_reduce(reduce_path, reduce_src, reduce_c, reduce_candidates, global); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const GuardError& e) {
        std::cerr << "guard refusal: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

// brauer-ext: Ext groups between simple modules of Brauer tree algebras.

#include "brauer/closed_form.hpp"
#include "brauer/errors.hpp"
#include "brauer/groups.hpp"
#include "brauer/oracle.hpp"
#include "brauer/pim.hpp"
#include "brauer/presets.hpp"
#include "brauer/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

using namespace brauer;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Source {
    std::string tree_file;
    std::string preset;
    int m = 1;
    int a = 0;
    int e = 0;
    bool mirrored = false;
    std::string position;
    std::string family;
    std::uint64_t q = 0;
    std::uint64_t r = 0;
    int block = 1;
};

struct Common {
    Elem p = 2;
    std::size_t max_dim = 100000;
    std::string variant = "derived";
};

void add_source(CLI::App* cmd, Source& s)
{
    cmd->add_option("--tree", s.tree_file, "Tree file (JSON)");
    cmd->add_option("--preset", s.preset, "Named tree shape");
    cmd->add_option("--m", s.m, "Exceptional multiplicity")->check(CLI::PositiveNumber);
    cmd->add_option("--a", s.a, "Inner position of the exceptional vertex on a line");
    cmd->add_option("--e", s.e, "Edge count for stars and lines");
    cmd->add_flag("--mirrored", s.mirrored, "Reverse every cyclic order");
    cmd->add_option("--position", s.position, "psu3_line exceptional position: none, outer or inner");
    cmd->add_option("--family", s.family, "Sz or Ree (classification route)");
    cmd->add_option("--q", s.q, "Field size of the group");
    cmd->add_option("--r", s.r, "Characteristic of the block");
    cmd->add_option("--block", s.block, "Block number within a classified configuration")->check(CLI::PositiveNumber);
}

void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_option("--char", c.p, "Characteristic of the coefficient field")->check(CLI::PositiveNumber);
    cmd->add_option("--max-dim", c.max_dim, "Refuse projective covers larger than this");
}

struct Resolved {
    BrauerTree tree;
    std::optional<TreePreset> preset;
    std::vector<std::string> labels;
    std::string name;
};

Resolved resolve(const Source& s)
{
    const int given = !s.tree_file.empty() + !s.preset.empty() + !s.family.empty();
    if (given != 1)
        throw ParameterError("give exactly one of --tree, --preset, --family");
    Resolved out;
    if (!s.tree_file.empty()) {
        out.tree = load_tree_file(s.tree_file);
        out.preset = recognise(out.tree);
    } else {
        TreePreset p;
        if (!s.preset.empty()) {
            p.kind = preset_kind_from_name(s.preset);
            p.m = s.m;
            p.a = s.a;
            p.e = s.e;
            p.mirrored = s.mirrored;
            if (!s.position.empty()) {
                if (s.position == "none")
                    p.position = LinePosition::none;
                else if (s.position == "outer")
                    p.position = LinePosition::outer;
                else if (s.position == "inner")
                    p.position = LinePosition::inner;
                else
                    throw ParameterError("unknown position '" + s.position + "'");
            }
            TreePreset probe = p;
            probe.e = 0;
            if (const int fixed = preset_edge_count(probe); fixed != 0)
                p.e = fixed;
            else if (p.e < 1)
                throw ParameterError(preset_name(p.kind) + " needs --e");
        } else {
            const GroupBlockConfig cfg = classify(family_from_name(s.family), s.q, s.r);
            if (s.block < 1 || static_cast<std::size_t>(s.block) > cfg.blocks.size())
                throw ParameterError("configuration has " + std::to_string(cfg.blocks.size()) + " block(s)");
            p = cfg.blocks[static_cast<std::size_t>(s.block - 1)].preset;
            p.mirrored = s.mirrored;
        }
        out.tree = instantiate(p);
        out.preset = p;
    }
    if (out.preset) {
        out.labels = simple_labels(*out.preset);
        out.name = describe(*out.preset);
    } else {
        out.labels.push_back("");
        for (int i = 1; i <= out.tree.edge_count(); ++i)
            out.labels.push_back("S_" + std::to_string(i));
        out.name = "tree file " + s.tree_file;
    }
    return out;
}

int simple_index(const Resolved& r, const std::string& text)
{
    for (std::size_t k = 1; k < r.labels.size(); ++k)
        if (r.labels[k] == text)
            return static_cast<int>(k);
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used == text.size() && v >= 1 && v <= r.tree.edge_count())
            return v;
    } catch (const std::exception&) {
    }
    throw ParameterError("unknown simple module '" + text + "'");
}

int run_ext(const Source& s, const Common& c, const std::string& i_text, const std::string& j_text, int n,
            const std::string& engine)
{
    const Resolved r = resolve(s);
    const int i = simple_index(r, i_text);
    const int j = simple_index(r, j_text);
    if (n < 0)
        throw ParameterError("--n must be >= 0");
    std::optional<int> oracle_value;
    std::optional<int> closed_value;
    if (engine == "oracle" || engine == "both")
        oracle_value = ext_dims_oracle(r.tree, c.p, i, n, OmegaOptions{c.max_dim}).back()[static_cast<std::size_t>(j - 1)];
    if (engine == "closed" || engine == "both") {
        std::optional<ClosedForm> form;
        if (r.preset)
            form = closed_form_for(*r.preset, variant_from_name(c.variant));
        if (!form)
            throw ParameterError("no closed form for " + r.name);
        closed_value = form->ext(i, j, n);
    }
    if (engine == "both") {
        std::cout << "oracle " << *oracle_value << "\nclosed " << *closed_value << "\n"
                  << (*oracle_value == *closed_value ? "match" : "MISMATCH") << "\n";
        return *oracle_value == *closed_value ? 0 : kExitMismatch;
    }
    std::cout << (oracle_value ? *oracle_value : *closed_value) << "\n";
    return 0;
}

int run_table(const Source& s, const Common& c, int n_max, const std::string& engine, const std::string& format)
{
    const Resolved r = resolve(s);
    ExtGrid g;
    if (engine == "oracle") {
        g = oracle_grid(r.tree, c.p, n_max, OmegaOptions{c.max_dim});
    } else {
        std::optional<ClosedForm> form;
        if (r.preset)
            form = closed_form_for(*r.preset, variant_from_name(c.variant));
        if (!form)
            throw ParameterError("no closed form for " + r.name);
        g = closed_grid(*form, r.tree.edge_count(), n_max);
    }
    std::cout << (format == "json" ? render_json(g) : render_csv(g));
    return 0;
}

int run_verify(const Source& s, const Common& c, std::optional<int> n_max)
{
    const Resolved r = resolve(s);
    const Variant v = variant_from_name(c.variant);
    int n = n_max ? *n_max : 4 * r.tree.edge_count() - 1;
    if (r.preset) {
        if (!n_max)
            if (auto form = closed_form_for(*r.preset, v))
                n = std::max(n, 4 * form->period - 1);
        const VerifyReport rep = verify_preset(*r.preset, n, c.p, v, OmegaOptions{c.max_dim});
        std::cout << rep.to_string();
        return rep.pass() ? 0 : kExitMismatch;
    }
    const VerifyReport rep = oracle_self_check(r.tree, r.name, n, c.p, OmegaOptions{c.max_dim});
    std::cout << rep.to_string();
    return rep.pass() ? 0 : kExitMismatch;
}

int run_verify_tables(const Common& c)
{
    const TablesReport rep = verify_tables(c.p, OmegaOptions{c.max_dim});
    std::cout << rep.to_string();
    return rep.pass() ? 0 : kExitMismatch;
}

int run_pim(const Source& s)
{
    const Resolved r = resolve(s);
    std::cout << r.name << "\n";
    const int e = r.tree.edge_count();
    for (int i = 1; i <= e; ++i) {
        const PimSpec spec = pim(r.tree, i);
        std::cout << "P(" << r.labels[static_cast<std::size_t>(i)] << ") dim " << spec.dimension() << ": "
                  << spec.to_string() << "\n";
    }
    std::cout << "Cartan matrix:\n";
    for (const auto& row : cartan_matrix(r.tree)) {
        for (std::size_t k = 0; k < row.size(); ++k)
            std::cout << (k ? " " : "") << row[k];
        std::cout << "\n";
    }
    return 0;
}

int run_omega(const Source& s, const Common& c, const std::string& i_text, int n, const std::string& j_text,
              std::uint64_t seed)
{
    const Resolved r = resolve(s);
    const int i = simple_index(r, i_text);
    const QuiverAlgebra alg = build_algebra(r.tree, c.p);
    const auto orbit = omega_orbit(alg, i, n, OmegaOptions{c.max_dim});
    const ModuleRep& m = orbit.back();
    std::cout << "dim " << m.total_dim() << "\nhead";
    const auto head = head_multiplicities(alg, m);
    for (std::size_t k = 0; k < head.size(); ++k)
        if (head[k] > 0)
            std::cout << " " << r.labels[k + 1] << (head[k] > 1 ? "^" + std::to_string(head[k]) : "");
    std::cout << "\n";
    if (!j_text.empty()) {
        const int j = simple_index(r, j_text);
        IsoOptions opts;
        opts.seed = seed;
        const IsoResult res = is_isomorphic(alg, m, simple_module(alg, j), opts);
        std::cout << "isomorphic to " << r.labels[static_cast<std::size_t>(j)] << ": " << to_string(res) << "\n";
        return res == IsoResult::yes ? 0 : kExitMismatch;
    }
    return 0;
}

int run_classify(const std::string& family, std::uint64_t q, std::uint64_t r)
{
    std::cout << classify(family_from_name(family), q, r).describe();
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Ext groups between simple modules of Brauer tree algebras"};
    app.require_subcommand(1);

    Source src;
    Common common;
    std::string i_text;
    std::string j_text;
    int n = 0;
    int n_max_value = 0;
    std::string engine = "oracle";
    std::string format = "csv";
    std::uint64_t seed = 0x5eed;

    auto engines = CLI::IsMember({"oracle", "closed", "both"});
    auto variants = CLI::IsMember({"derived", "stated"});

    auto* ext = app.add_subcommand("ext", "dim Ext^n(S_i, S_j)");
    add_source(ext, src);
    add_common(ext, common);
    ext->add_option("--i", i_text, "First simple (index or label)")->required();
    ext->add_option("--j", j_text, "Second simple (index or label)")->required();
    ext->add_option("--n", n, "Degree")->required();
    ext->add_option("--engine", engine, "oracle, closed or both")->check(engines);
    ext->add_option("--variant", common.variant, "Star and line formulas: derived or stated")->check(variants);

    auto* table = app.add_subcommand("table", "All dim Ext^l(S_i, S_j) for l <= n-max");
    add_source(table, src);
    add_common(table, common);
    table->add_option("--n-max", n_max_value, "Largest degree")->required()->check(CLI::NonNegativeNumber);
    table->add_option("--engine", engine, "oracle or closed")->check(CLI::IsMember({"oracle", "closed"}));
    table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--variant", common.variant, "Star and line formulas: derived or stated")->check(variants);

    auto* verify = app.add_subcommand("verify", "Compare the closed form with the exact engine");
    add_source(verify, src);
    add_common(verify, common);
    auto* verify_n = verify->add_option("--n-max", n_max_value, "Largest degree (default: four periods)")
                         ->check(CLI::NonNegativeNumber);
    verify->add_option("--variant", common.variant, "Star and line formulas: derived or stated")->check(variants);

    auto* tables = app.add_subcommand("verify-tables", "Check every group table against the exact engine");
    add_common(tables, common);

    auto* pim_cmd = app.add_subcommand("pim", "Projective indecomposables and the Cartan matrix");
    add_source(pim_cmd, src);

    auto* omega_cmd = app.add_subcommand("omega", "Heller translate Omega^n(S_i)");
    add_source(omega_cmd, src);
    add_common(omega_cmd, common);
    omega_cmd->add_option("--i", i_text, "Simple (index or label)")->required();
    omega_cmd->add_option("--n", n, "Number of translates")->required()->check(CLI::NonNegativeNumber);
    omega_cmd->add_option("--j", j_text, "Test for an isomorphism with S_j");
    omega_cmd->add_option("--seed", seed, "Seed of the randomised isomorphism search");

    std::string family;
    std::uint64_t q = 0;
    std::uint64_t r = 0;
    auto* cls = app.add_subcommand("classify", "Blocks of Sz(q) or Ree(q) in characteristic r");
    cls->add_option("--family", family, "Sz or Ree")->required();
    cls->add_option("--q", q, "Field size")->required();
    cls->add_option("--r", r, "Prime")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*ext)
            return run_ext(src, common, i_text, j_text, n, engine);
        if (*table)
            return run_table(src, common, n_max_value, engine, format);
        if (*verify)
            return run_verify(src, common, *verify_n ? std::optional<int>(n_max_value) : std::nullopt);
        if (*tables)
            return run_verify_tables(common);
        if (*pim_cmd)
            return run_pim(src);
        if (*omega_cmd)
            return run_omega(src, common, i_text, n, j_text, seed);
        if (*cls)
            return run_classify(family, q, r);
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

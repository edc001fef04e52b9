#include "nichols/cli.hpp"

#include "nichols/errors.hpp"
#include "nichols/identities.hpp"
#include "nichols/io.hpp"
#include "nichols/nichols.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <random>

namespace nichols {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string spec_path;
    int max_degree = 4;
    bool json = false;
    int n = 4;
    int trials = 3;
    unsigned long long seed = 1;
    bool symbolic = false;
    int classes = 3;
    std::string element;
    std::string side = "right";
    std::string index;
    std::string i, j;
    int bound = 12;
};

class UsageError : public Error {
public:
    using Error::Error;
};

BraidingSpec read_spec(const std::string& path)
{
    if (!std::filesystem::is_regular_file(path)) throw UsageError("spec file '" + path + "' not found");
    return load_spec(path);
}

int letter_arg(const std::string& text, const BraidingSpec& spec)
{
    if (!text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        const int k = std::stoi(text);
        if (k < 1 || k > spec.dim())
            throw UsageError("letter index " + text + " outside 1.." + std::to_string(spec.dim()));
        return k - 1;
    }
    return spec.letter_index(text);
}

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

std::string certificate_text(const Certificates& c)
{
    return "[ker S_n: " + yes_no(c.in_ker_sn) + ", im P_n: " + yes_no(c.in_im_pn) + ", primitive: " + yes_no(c.primitive) +
           "]";
}

Json vector_json(const TensorVector& v)
{
    Json terms = Json::array();
    for (const auto& [w, c] : v.terms()) {
        Json word = Json::array();
        for (int a : w) word.push_back(a + 1);
        terms.push_back({{"word", word}, {"coeff", to_string(c)}});
    }
    return terms;
}

// --- relations ---------------------------------------------------------------

int cmd_relations(const Options& o, std::ostream& out)
{
    const BraidingSpec spec = read_spec(o.spec_path);
    Json classes = Json::array();
    for (const auto& m : theta_fixed_classes(spec, o.max_degree)) {
        const LevelReport level = level_classify(m, spec);
        Json entry{{"multidegree", m}, {"verdict", to_string(level.verdict)}};
        std::vector<Relation> relations;
        RelationSearch search;
        if (level.verdict == Verdict::LevelN) {
            search = search_relations(m, spec);
            relations = search.relations;
        }
        Json rel_json = Json::array();
        for (const auto& r : relations)
            rel_json.push_back({{"terms", vector_json(r.vector)},
                                {"certificates",
                                 {{"in_ker_Sn", r.certificates.in_ker_sn},
                                  {"in_im_Pn", r.certificates.in_im_pn},
                                  {"primitive", r.certificates.primitive}}}});
        entry["relations"] = rel_json;
        Json witnesses = Json::array();
        for (const auto& v : level.violating_subsets) witnesses.push_back({{"size", v.size}, {"subset", v.subset}});
        entry["violating_subsets"] = witnesses;
        if (level.verdict == Verdict::LevelN) {
            entry["kernel_dimension"] = search.kernel_dimension;
            entry["spans_kernel"] = search.spans_kernel;
        }
        classes.push_back(entry);

        if (o.json) continue;
        out << "class " << format_multidegree(m) << "  " << to_string(level.verdict);
        if (!level.violating_subsets.empty()) {
            const auto& v = level.violating_subsets.front();
            out << "  witness: s=" << v.size << " " << format_multidegree(v.subset) << " has Pi_s = 1";
            if (level.violating_subsets.size() > 1) out << " (+" << level.violating_subsets.size() - 1 << " more)";
        }
        out << "\n";
        for (std::size_t k = 0; k < relations.size(); ++k)
            out << "  relation " << k + 1 << ": " << format_vector(relations[k].vector, spec) << "  "
                << certificate_text(relations[k].certificates) << "\n";
        if (level.verdict == Verdict::LevelN)
            out << "  dim ker S_n = " << search.kernel_dimension << (search.spans_kernel ? " (spanned)" : " (not spanned)")
                << "\n";
    }
    if (o.json)
        out << Json{{"classes", classes}}.dump(2) << "\n";
    else if (classes.empty())
        out << "no theta-fixed classes up to degree " << o.max_degree << "\n";
    return kExitOk;
}

// --- identities --------------------------------------------------------------

Rational random_point(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-97, 97), den(1, 89);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

int cmd_identities(const Options& o, std::ostream& out)
{
    const BraidingSpec spec = read_spec(o.spec_path);
    if (o.n < 2) throw UsageError("--n must be at least 2");
    std::vector<BraidingSpec> instances;
    std::string mode;
    if (spec.is_numeric() || o.symbolic) {
        instances.push_back(spec);
        mode = spec.is_numeric() ? "exact (numeric spec)" : "exact (symbolic)";
    } else {
        std::mt19937_64 rng(o.seed);
        while (static_cast<int>(instances.size()) < o.trials) {
            const Rational p = random_point(rng);
            try {
                BraidingSpec s = spec.evaluated_at(p);
                instances.push_back(std::move(s));
            } catch (const PoleAtPoint&) {
            } catch (const ZeroEntry&) {
            }
        }
        mode = "evaluated at " + std::to_string(o.trials) + " random rational points (seed " + std::to_string(o.seed) + ")";
    }
    out << "mode: " << mode << "\n";
    int failures = 0;
    for (int n = 2; n <= o.n; ++n)
        for (const auto& m : sample_classes(spec.dim(), n, o.classes)) {
            const ClassPtr cls = make_class(m);
            for (IdentityKind kind : all_identities()) {
                bool holds = true;
                for (const auto& s : instances) holds = holds && check_identity(kind, cls, s);
                failures += holds ? 0 : 1;
                out << (holds ? "PASS " : "FAIL ") << to_string(kind) << " n=" << n << " " << format_multidegree(m) << "\n";
            }
        }
    out << (failures == 0 ? "all identities hold" : std::to_string(failures) + " identities FAILED") << "\n";
    return failures == 0 ? kExitOk : kExitComputation;
}

// --- small commands --------------------------------------------------------

int cmd_hilbert(const Options& o, std::ostream& out)
{
    const BraidingSpec spec = read_spec(o.spec_path);
    const auto dims = nichols_dimensions(spec, o.max_degree);
    for (std::size_t d = 0; d < dims.size(); ++d) out << "degree " << d << ": " << dims[d] << "\n";
    return kExitOk;
}

int cmd_primitive(const Options& o, std::ostream& out)
{
    const BraidingSpec spec = read_spec(o.spec_path);
    const TensorVector x = parse_element(o.element, spec);
    if (!x.is_homogeneous()) throw DegreeMismatch("primitive: element must be homogeneous");
    const bool p = x.degree() >= 1 && is_primitive(x, spec);
    out << (p ? "true" : "false") << "\n";
    return kExitOk;
}

int cmd_derive(const Options& o, std::ostream& out)
{
    const BraidingSpec spec = read_spec(o.spec_path);
    Side side;
    if (o.side == "left")
        side = Side::Left;
    else if (o.side == "right")
        side = Side::Right;
    else
        throw UsageError("--side must be left or right");
    const int letter = letter_arg(o.index, spec);
    TensorVector result;
    for (const auto& [d, component] : parse_element(o.element, spec).components())
        result += derivation(side, letter, component, spec);
    out << format_vector(result, spec) << "\n";
    return kExitOk;
}

int cmd_serre(const Options& o, std::ostream& out)
{
    const BraidingSpec spec = read_spec(o.spec_path);
    const int i = letter_arg(o.i, spec), j = letter_arg(o.j, spec);
    if (i == j) throw UsageError("--i and --j must differ");
    const SerreRelation s = serre_element(i, j, spec, o.bound);
    out << "c = " << s.cartan_entry << ", N = " << s.exponent << ", degree " << s.exponent + 1 << "\n";
    out << format_vector(s.relation.vector, spec) << "  " << certificate_text(s.relation.certificates) << "\n";
    return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Relations of Nichols algebras of diagonal type", "nichols"};
    app.require_subcommand(1);

    auto* relations = app.add_subcommand("relations", "level-n relations of every theta-fixed class");
    relations->add_option("--spec", o.spec_path, "braiding spec file")->required();
    relations->add_option("--max-degree", o.max_degree, "largest degree scanned")->check(CLI::Range(2, 64));
    relations->add_flag("--json", o.json, "machine-readable output");

    auto* identities = app.add_subcommand("identities", "braid group algebra identities on sample classes");
    identities->add_option("--spec", o.spec_path, "braiding spec file")->required();
    identities->add_option("--n", o.n, "check degrees 2..n")->check(CLI::Range(2, 12));
    identities->add_option("--trials", o.trials, "random evaluation points")->check(CLI::Range(1, 1000));
    identities->add_option("--seed", o.seed, "random seed");
    identities->add_option("--classes", o.classes, "classes per degree")->check(CLI::Range(1, 1000));
    identities->add_flag("--symbolic", o.symbolic, "compare over Q(q) instead of at random points");

    auto* hilbert = app.add_subcommand("hilbert", "dimensions of the homogeneous components");
    hilbert->add_option("--spec", o.spec_path, "braiding spec file")->required();
    hilbert->add_option("--max-degree", o.max_degree, "largest degree")->check(CLI::Range(0, 64));

    auto* primitive = app.add_subcommand("primitive", "decide whether an element is primitive");
    primitive->add_option("--spec", o.spec_path, "braiding spec file")->required();
    primitive->add_option("--element", o.element, "element expression")->required();

    auto* derive = app.add_subcommand("derive", "apply a skew-derivation");
    derive->add_option("--spec", o.spec_path, "braiding spec file")->required();
    derive->add_option("--side", o.side, "left or right");
    derive->add_option("--index", o.index, "generator index (1-based) or name")->required();
    derive->add_option("--element", o.element, "element expression")->required();

    auto* serre = app.add_subcommand("serre", "quantum Serre element for a pair of generators");
    serre->add_option("--spec", o.spec_path, "braiding spec file")->required();
    serre->add_option("--i", o.i, "first generator (index or name)")->required();
    serre->add_option("--j", o.j, "second generator (index or name)")->required();
    serre->add_option("--bound", o.bound, "largest |c| scanned")->check(CLI::Range(0, 1000));

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("nichols");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*relations) return cmd_relations(o, out);
        if (*identities) return cmd_identities(o, out);
        if (*hilbert) return cmd_hilbert(o, out);
        if (*primitive) return cmd_primitive(o, out);
        if (*derive) return cmd_derive(o, out);
        if (*serre) return cmd_serre(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kExitParse;
    } catch (const UnknownName& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ZeroEntry& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitUsage;
}

}  // namespace nichols

#include "hyperdyn/scenario.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "hyperdyn/errors.hpp"

namespace hyperdyn {

namespace {

void expect_keys(const YAML::Node& node, const std::set<std::string>& allowed, const std::string& where) {
    if (!node.IsMap()) throw ValidationError(where + " must be a mapping");
    for (const auto& kv : node) {
        const auto key = kv.first.as<std::string>();
        if (!allowed.contains(key)) throw ValidationError("unknown key '" + key + "' in " + where);
    }
}

const YAML::Node require(const YAML::Node& node, const std::string& key, const std::string& where) {
    const YAML::Node child = node[key];
    if (!child) throw ValidationError(where + " is missing '" + key + "'");
    return child;
}

template <typename T>
T get(const YAML::Node& node, const std::string& key, const std::string& where) {
    const YAML::Node child = require(node, key, where);
    try {
        return child.as<T>();
    } catch (const YAML::Exception&) {
        throw ValidationError(where + "." + key + " has the wrong type");
    }
}

template <typename T>
T get_or(const YAML::Node& node, const std::string& key, T fallback, const std::string& where) {
    if (!node || !node[key]) return fallback;
    return get<T>(node, key, where);
}

YAML::Node params_of(const YAML::Node& section) {
    return section["params"] ? section["params"] : YAML::Node(YAML::NodeType::Map);
}

std::vector<std::pair<std::int64_t, double>> pair_list(const YAML::Node& node, const std::string& where) {
    if (!node.IsSequence()) throw ValidationError(where + " must be a list of [label, value] pairs");
    std::vector<std::pair<std::int64_t, double>> out;
    for (const auto& item : node) {
        if (!item.IsSequence() || item.size() != 2) {
            throw ValidationError(where + " entries must be [label, value] pairs");
        }
        try {
            out.emplace_back(item[0].as<std::int64_t>(), item[1].as<double>());
        } catch (const YAML::Exception&) {
            throw ValidationError(where + " entries must be [integer, number] pairs");
        }
    }
    return out;
}

SparseMeasure measure_from(const YAML::Node& node, const std::string& where) {
    std::map<Element, double> atoms;
    for (const auto& [label, mass] : pair_list(node, where)) atoms[Element{label}] += mass;
    return SparseMeasure::from_map(atoms);
}

HypergroupModel build_model(const YAML::Node& section) {
    const std::string where = "hypergroup";
    expect_keys(section, {"family", "params", "window"}, where);
    const auto family = get<std::string>(section, "family", where);
    const YAML::Node params = params_of(section);
    if (family == "table") {
        expect_keys(params, {"elements", "identity", "involution", "products"}, "hypergroup.params");
        TableSpec spec;
        for (const auto& x : require(params, "elements", "hypergroup.params")) {
            spec.elements.push_back(Element{x.as<std::int64_t>()});
        }
        spec.identity = Element{get<std::int64_t>(params, "identity", "hypergroup.params")};
        if (params["involution"]) {
            for (const auto& [x, xinv] : pair_list(params["involution"], "hypergroup.params.involution")) {
                spec.involution[Element{x}] = Element{static_cast<std::int64_t>(xinv)};
            }
        }
        for (const auto& entry : require(params, "products", "hypergroup.params")) {
            const std::string ew = "hypergroup.params.products entry";
            expect_keys(entry, {"x", "y", "measure"}, ew);
            const Element x{get<std::int64_t>(entry, "x", ew)};
            const Element y{get<std::int64_t>(entry, "y", ew)};
            if (!spec.products.emplace(std::pair{x, y}, measure_from(require(entry, "measure", ew), ew)).second) {
                throw ValidationError("table lists the product (" + to_string(x) + ", " + to_string(y) + ") twice");
            }
        }
        auto model = HypergroupModel::table_defined(spec);
        const auto violations = verify_axioms(model, model.window());
        if (!violations.empty()) {
            std::ostringstream msg;
            msg << "table hypergroup violates its axioms:";
            for (const auto& v : violations) msg << " " << to_string(v.axiom) << " (" << v.witness << ")";
            throw ValidationError(msg.str());
        }
        return model;
    }
    const auto window = get<std::int64_t>(section, "window", where);
    if (window < 1) throw ValidationError("hypergroup.window must be >= 1");
    if (family == "dunkl_ramirez") {
        expect_keys(params, {"a"}, "hypergroup.params");
        return HypergroupModel::dunkl_ramirez(get<double>(params, "a", "hypergroup.params"), window);
    }
    expect_keys(params, {}, "hypergroup.params");
    if (family == "su2") return HypergroupModel::su2(window);
    if (family == "integer_group") return HypergroupModel::integer_group(window);
    throw ValidationError("unknown hypergroup family '" + family + "'");
}

YoungFunction build_young(const YAML::Node& section) {
    const std::string where = "young";
    expect_keys(section, {"kind", "params"}, where);
    const auto kind = get<std::string>(section, "kind", where);
    const YAML::Node params = params_of(section);
    if (kind == "phi_p") {
        expect_keys(params, {"p"}, "young.params");
        return YoungFunction::phi_p(get<double>(params, "p", "young.params"));
    }
    if (kind == "tabulated") {
        expect_keys(params, {"knots"}, "young.params");
        std::vector<Knot> knots;
        const YAML::Node list = require(params, "knots", "young.params");
        if (!list.IsSequence()) throw ValidationError("young.params.knots must be a list of [t, value] pairs");
        for (const auto& item : list) {
            if (!item.IsSequence() || item.size() != 2) {
                throw ValidationError("young.params.knots entries must be [t, value] pairs");
            }
            knots.push_back({item[0].as<double>(), item[1].as<double>()});
        }
        return YoungFunction::tabulated(std::move(knots));
    }
    expect_keys(params, {}, "young.params");
    if (kind == "exp_minus_linear") return YoungFunction::exp_minus_linear();
    if (kind == "cosh_minus_one") return YoungFunction::cosh_minus_one();
    throw ValidationError("unknown young kind '" + kind + "'");
}

Weight build_weight(const YAML::Node& section) {
    const std::string where = "weight";
    const std::string pw = "weight.params";
    expect_keys(section, {"form", "params"}, where);
    const auto form = get<std::string>(section, "form", where);
    const YAML::Node params = params_of(section);
    if (form == "constant") {
        expect_keys(params, {"c"}, pw);
        return Weight::constant(get<double>(params, "c", pw));
    }
    if (form == "step") {
        expect_keys(params, {"threshold", "low", "high"}, pw);
        return Weight::step(get<std::int64_t>(params, "threshold", pw), get<double>(params, "low", pw),
                            get<double>(params, "high", pw));
    }
    if (form == "table") {
        expect_keys(params, {"values", "default"}, pw);
        std::map<Element, double> values;
        for (const auto& [x, v] : pair_list(require(params, "values", pw), pw + ".values")) values[Element{x}] = v;
        return Weight::table(std::move(values), get<double>(params, "default", pw));
    }
    if (form == "geometric") {
        expect_keys(params, {"c", "r"}, pw);
        return Weight::geometric(get<double>(params, "c", pw), get<double>(params, "r", pw));
    }
    throw ValidationError("unknown weight form '" + form + "'");
}

EtaSequence build_eta(const YAML::Node& section, const HypergroupModel& model) {
    const std::string where = "eta";
    const std::string pw = "eta.params";
    expect_keys(section, {"generator", "params"}, where);
    const auto generator = get<std::string>(section, "generator", where);
    const YAML::Node params = params_of(section);
    if (generator == "center_powers") {
        expect_keys(params, {"z"}, pw);
        const Element z{get<std::int64_t>(params, "z", pw)};
        if (!model.contains(z)) throw ValidationError("eta.params.z is outside the window");
        return EtaSequence::center_powers(model, z);
    }
    if (generator == "table") {
        expect_keys(params, {"entries"}, pw);
        std::map<std::int64_t, Element> entries;
        for (const auto& [n, x] : pair_list(require(params, "entries", pw), pw + ".entries")) {
            entries[n] = Element{static_cast<std::int64_t>(x)};
        }
        return EtaSequence::table(model, std::move(entries));
    }
    if (generator == "identity") {
        expect_keys(params, {}, pw);
        return EtaSequence::identity_labels();
    }
    if (generator == "constant") {
        expect_keys(params, {"c"}, pw);
        return EtaSequence::constant(Element{get<std::int64_t>(params, "c", pw)});
    }
    throw ValidationError("unknown eta generator '" + generator + "'");
}

ProductConvention parse_convention(const std::string& s) {
    if (s == "iterate_exclusive") return ProductConvention::IterateExclusive;
    if (s == "paper_inclusive") return ProductConvention::PaperInclusive;
    throw ValidationError("unknown convention '" + s + "'");
}

RunConfig build_run(const YAML::Node& section) {
    RunConfig run;
    if (!section) return run;
    const std::string w = "run";
    expect_keys(section, {"horizon", "k_max", "series_cutoff", "rs_bound", "triple_bound", "convention", "eps_ratio",
                          "tolerances", "haar_shift", "haar_trials"},
                w);
    run.horizon = get_or<std::int64_t>(section, "horizon", run.horizon, w);
    run.k_max = get_or<int>(section, "k_max", run.k_max, w);
    run.series_cutoff = get_or<int>(section, "series_cutoff", run.series_cutoff, w);
    run.rs_bound = get_or<std::int64_t>(section, "rs_bound", run.rs_bound, w);
    run.triple_bound = get_or<std::int64_t>(section, "triple_bound", run.triple_bound, w);
    run.eps_ratio = get_or<double>(section, "eps_ratio", run.eps_ratio, w);
    run.haar_shift = get_or<std::int64_t>(section, "haar_shift", run.haar_shift, w);
    run.haar_trials = get_or<int>(section, "haar_trials", run.haar_trials, w);
    if (section["convention"]) run.convention = parse_convention(get<std::string>(section, "convention", w));
    if (const YAML::Node tol = section["tolerances"]) {
        expect_keys(tol, {"haar", "sandwich"}, "run.tolerances");
        run.haar_tolerance = get_or<double>(tol, "haar", run.haar_tolerance, "run.tolerances");
        run.sandwich_tolerance = get_or<double>(tol, "sandwich", run.sandwich_tolerance, "run.tolerances");
    }
    if (run.horizon < 1) throw ValidationError("run.horizon must be >= 1");
    if (run.k_max < 1) throw ValidationError("run.k_max must be >= 1");
    if (run.series_cutoff < 1) throw ValidationError("run.series_cutoff must be >= 1");
    if (run.rs_bound < 1) throw ValidationError("run.rs_bound must be >= 1");
    if (run.triple_bound < 0) throw ValidationError("run.triple_bound must be >= 0");
    if (!(run.eps_ratio > 0.0 && run.eps_ratio < 1.0)) throw ValidationError("run.eps_ratio must lie in (0, 1)");
    if (run.haar_trials < 1) throw ValidationError("run.haar_trials must be >= 1");
    return run;
}

void check_label(const HypergroupModel& model, std::int64_t label, const std::string& where) {
    if (!model.contains(Element{label})) {
        throw ValidationError(where + " uses label " + std::to_string(label) + " outside the window");
    }
}

ElementSet build_set(const YAML::Node& node, const HypergroupModel& model, const std::string& where) {
    ElementSet out;
    if (node.IsSequence()) {
        for (const auto& x : node) {
            const auto label = x.as<std::int64_t>();
            check_label(model, label, where);
            out.insert(Element{label});
        }
        return out;
    }
    expect_keys(node, {"from", "to"}, where);
    const auto from = get<std::int64_t>(node, "from", where);
    const auto to = get<std::int64_t>(node, "to", where);
    if (from > to) throw ValidationError(where + " has from > to");
    for (std::int64_t label = from; label <= to; ++label) {
        check_label(model, label, where);
        out.insert(Element{label});
    }
    return out;
}

/// Every a(+-n) up to the horizon has to be addressable.
void dry_run(const HypergroupModel& model, const EtaSequence& eta, std::int64_t horizon) {
    for (std::int64_t n = 1; n <= horizon; ++n) {
        try {
            (void)eta(model, n);
            (void)eta(model, -n);
        } catch (const WindowOverflow& e) {
            throw WindowOverflow("window " + std::to_string(model.window()) + " cannot reach a(" +
                                  std::to_string(n) + ") for horizon " + std::to_string(horizon) + ": " + e.what());
        }
    }
}

}  // namespace

DynamicsContext Scenario::context() const {
    return DynamicsContext{model, weight, eta, phi, run.convention, geometric_schedule(run.eps_ratio)};
}

const ElementSet& Scenario::set(const std::string& name) const {
    auto it = sets.find(name);
    if (it == sets.end()) throw ValidationError("scenario has no set named '" + name + "'");
    return it->second;
}

const SparseFunction& Scenario::function(const std::string& name) const {
    auto it = functions.find(name);
    if (it == functions.end()) throw ValidationError("scenario has no function named '" + name + "'");
    return it->second;
}

Scenario parse_scenario(const std::string& text) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw ValidationError(std::string("scenario is not valid YAML: ") + e.what());
    }
    try {
        expect_keys(root, {"id", "hypergroup", "young", "weight", "eta", "sets", "functions", "run"}, "scenario");
        auto model = build_model(require(root, "hypergroup", "scenario"));
        auto phi = build_young(require(root, "young", "scenario"));
        auto weight = build_weight(require(root, "weight", "scenario"));
        auto eta = build_eta(require(root, "eta", "scenario"), model);
        auto run = build_run(root["run"]);
        dry_run(model, eta, run.horizon);

        std::map<std::string, ElementSet> sets;
        if (const YAML::Node node = root["sets"]) {
            if (!node.IsMap()) throw ValidationError("sets must be a mapping");
            for (const auto& kv : node) {
                const auto name = kv.first.as<std::string>();
                sets[name] = build_set(kv.second, model, "sets." + name);
            }
        }
        std::map<std::string, SparseFunction> functions;
        if (const YAML::Node node = root["functions"]) {
            if (!node.IsMap()) throw ValidationError("functions must be a mapping");
            for (const auto& kv : node) {
                const auto name = kv.first.as<std::string>();
                const std::string where = "functions." + name;
                std::map<Element, double> values;
                for (const auto& [label, v] : pair_list(kv.second, where)) {
                    check_label(model, label, where);
                    values[Element{label}] += v;
                }
                functions.emplace(name, SparseFunction::from_map(values));
            }
        }

        std::vector<std::string> advisories;
        if (phi.kind() == YoungKind::Tabulated) {
            advisories.push_back("complementary function is assumed increasing; not verified for tabulated kinds");
        }
        return Scenario{get_or<std::string>(root, "id", "scenario", "scenario"),
                        text,
                        std::move(model),
                        std::move(phi),
                        std::move(weight),
                        std::move(eta),
                        std::move(sets),
                        std::move(functions),
                        run,
                        std::move(advisories)};
    } catch (const YAML::Exception& e) {
        throw ValidationError(std::string("malformed scenario: ") + e.what());
    }
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open scenario file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

}  // namespace hyperdyn

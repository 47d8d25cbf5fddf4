#include "manip/config.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string_view>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace manip {

namespace {

namespace pt = boost::property_tree;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void fail(const std::string& key, const std::string& what) {
    throw ConfigError("key '" + key + "': " + what);
}

double parse_number(const std::string& key, std::string_view text) {
    text = trim(text);
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(x))
        fail(key, "expected a finite number, got '" + std::string(text) + "'");
    return x;
}

template <std::size_t N>
std::array<double, N> parse_numbers(const std::string& key, std::string_view text) {
    std::array<double, N> out{};
    std::size_t count = 0;
    while (true) {
        const auto comma = text.find(',');
        const auto item = text.substr(0, comma);
        if (count == N) fail(key, "expected " + std::to_string(N) + " comma-separated numbers");
        out[count++] = parse_number(key, item);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (count != N) fail(key, "expected " + std::to_string(N) + " comma-separated numbers");
    return out;
}

JointVector parse_joint(const std::string& key, std::string_view text) {
    return JointVector{parse_numbers<kJoints>(key, text)};
}

/// Key/value view of one section that tracks which keys were consumed.
class Section {
public:
    Section(std::string name, const pt::ptree& tree) : name_(std::move(name)) {
        for (const auto& [key, child] : tree) {
            if (!child.empty()) fail(qualified(key), "nested entries are not supported");
            values_[key] = child.data();
        }
    }

    std::string qualified(const std::string& key) const { return name_ + "." + key; }

    std::optional<std::string> take(const std::string& key) {
        auto it = values_.find(key);
        if (it == values_.end()) return std::nullopt;
        std::string v = it->second;
        values_.erase(it);
        return v;
    }

    std::string require(const std::string& key) {
        auto v = take(key);
        if (!v) fail(qualified(key), "missing");
        return *v;
    }

    void number(const std::string& key, double& dst) {
        if (auto v = take(key)) dst = parse_number(qualified(key), *v);
    }

    void joint(const std::string& key, JointVector& dst) {
        if (auto v = take(key)) dst = parse_joint(qualified(key), *v);
    }

    JointVector required_joint(const std::string& key) {
        return parse_joint(qualified(key), require(key));
    }

    /// Keys left over after parsing are unknown to the schema.
    void finish() const {
        if (!values_.empty()) fail(qualified(values_.begin()->first), "unknown key");
    }

private:
    std::string name_;
    std::map<std::string, std::string> values_;
};

void parse_params(Section& s, ManipulatorParams& p) {
    s.number("m1", p.m1);
    s.number("m2", p.m2);
    s.number("m3", p.m3);
    s.number("L1", p.L1);
    s.number("L2", p.L2);
    s.number("L3", p.L3);
    s.number("J1", p.J1);
    s.number("J2", p.J2);
    s.number("J3", p.J3);
    s.number("g", p.g);
    s.finish();
}

void parse_sim(Section& s, ExperimentConfig& cfg) {
    s.number("dt", cfg.sim.dt);
    s.number("t_end", cfg.sim.t_end);
    s.number("step_amplitude", cfg.step_amplitude);
    s.joint("initial_q", cfg.sim.initial.q);
    s.joint("initial_qdot", cfg.sim.initial.qdot);
    s.finish();
}

LinkGains gains_from(const JointVector& kp, const JointVector& ki, const JointVector& kd) {
    LinkGains g{};
    for (std::size_t i = 0; i < kJoints; ++i) g[i] = {kp[i], ki[i], kd[i]};
    return g;
}

fuzzy::FlcConfig parse_flc(Section& s) {
    fuzzy::FlcConfig cfg;
    const JointVector ke = s.required_joint("ke");
    const JointVector kde = s.required_joint("kde");
    const JointVector ku = s.required_joint("ku");
    for (std::size_t i = 0; i < kJoints; ++i) cfg.links[i] = {ke[i], kde[i], ku[i]};

    for (std::size_t l = 0; l < fuzzy::kInputSets; ++l) {
        const auto label = fuzzy::name(static_cast<fuzzy::InputLabel>(l));
        const std::string key = "mf." + std::string(label);
        if (auto v = s.take(key)) {
            const auto t = parse_numbers<3>(s.qualified(key), *v);
            cfg.system.inputs.sets[l] = {t[0], t[1], t[2]};
        }
    }
    for (std::size_t l = 0; l < fuzzy::kOutputSets; ++l) {
        const auto label = fuzzy::name(static_cast<fuzzy::OutputLabel>(l));
        const std::string key = "level." + std::string(label);
        if (auto v = s.take(key)) cfg.system.levels[l] = parse_number(s.qualified(key), *v);
    }
    for (std::size_t i = 0; i < fuzzy::kInputSets; ++i) {
        for (std::size_t j = 0; j < fuzzy::kInputSets; ++j) {
            const std::string key = "rule." +
                                    std::string(fuzzy::name(static_cast<fuzzy::InputLabel>(i))) +
                                    std::string(fuzzy::name(static_cast<fuzzy::InputLabel>(j)));
            if (auto v = s.take(key)) {
                const auto out = fuzzy::parse_output_label(trim(*v));
                if (!out) fail(s.qualified(key), "expected one of NB, N, Z, P, PB");
                cfg.system.rules[i][j] = *out;
            }
        }
    }
    s.finish();

    const auto wrap = [&](const char* key, auto&& check) {
        try {
            check();
        } catch (const std::invalid_argument& e) {
            fail(s.qualified(key), e.what());
        }
    };
    wrap("mf", [&] { cfg.system.inputs.validate(); });
    wrap("level", [&] { fuzzy::validate_levels(cfg.system.levels); });
    wrap("ku", [&] { cfg.validate(); });
    return cfg;
}

NamedController parse_controller(const std::string& name, Section& s) {
    const std::string type{trim(s.require("type"))};
    NamedController out{name, PdConfig{}};
    if (type == "pid") {
        const auto kp = s.required_joint("kp");
        const auto ki = s.required_joint("ki");
        const auto kd = s.required_joint("kd");
        out.config = PidConfig{gains_from(kp, ki, kd)};
        s.finish();
    } else if (type == "pd") {
        const auto kp = s.required_joint("kp");
        const auto kd = s.required_joint("kd");
        out.config = PdConfig{gains_from(kp, JointVector{}, kd)};
        s.finish();
    } else if (type == "flc") {
        out.config = parse_flc(s);
    } else {
        fail(s.qualified("type"), "expected pid, pd or flc, got '" + type + "'");
    }
    try {
        validate(out.config);
    } catch (const std::invalid_argument& e) {
        fail(s.qualified("type"), e.what());
    }
    return out;
}

}  // namespace

void ExperimentConfig::apply_step() {
    sim.reference = sim.initial.q + JointVector::filled(step_amplitude);
}

void ExperimentConfig::validate() const {
    if (controllers.empty()) throw ConfigError("key 'controller': at least one controller section is required");
    if (!std::isfinite(step_amplitude) || step_amplitude == 0.0)
        fail("sim.step_amplitude", "must be finite and non-zero");
    try {
        sim.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    std::set<std::string> names;
    for (const auto& c : controllers) {
        if (!names.insert(c.name).second) fail("controller." + c.name, "duplicate controller name");
        try {
            manip::validate(c.config);
        } catch (const std::invalid_argument& e) {
            fail("controller." + c.name, e.what());
        }
    }
}

ExperimentConfig parse_config(std::istream& in) {
    pt::ptree tree;
    try {
        pt::ini_parser::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError("line " + std::to_string(e.line()) + ": " + e.message());
    }

    ExperimentConfig cfg;
    for (const auto& [name, child] : tree) {
        if (child.empty()) fail(name, "entries must live inside a [section]");
        Section section(name, child);
        if (name == "params") {
            parse_params(section, cfg.sim.params);
        } else if (name == "sim") {
            parse_sim(section, cfg);
        } else if (name == "output") {
            if (auto dir = section.take("dir")) cfg.output_dir = std::string(trim(*dir));
            section.finish();
        } else if (name.starts_with("controller.") && name.size() > 11) {
            const std::string cname = name.substr(11);
            for (char c : cname)
                if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'))
                    fail(name, "controller names may use letters, digits, '_' and '-'");
            cfg.controllers.push_back(parse_controller(cname, section));
        } else {
            fail(name, "unknown section");
        }
    }

    try {
        cfg.sim.params.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    cfg.apply_step();
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
    return parse_config(in);
}

}  // namespace manip

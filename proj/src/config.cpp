#include "heterorank/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "heterorank/io.hpp"
#include "heterorank/rng.hpp"

namespace hr {

void ExperimentConfig::validate() const {
    if (n < 4) throw ConfigError("config: n must be at least 4");
    if (k == 0 || k > n / 2) throw ConfigError("config: k must be in [1, n/2]");
    if (!domain_sizes.empty()) {
        std::uint32_t total = 0;
        for (std::uint32_t s : domain_sizes) {
            if (s < 2) throw ConfigError("config: domain sizes must be at least 2");
            total += s;
        }
        if (total != n || domain_sizes.size() != k) {
            throw ConfigError("config: domain_sizes must list k sizes summing to n");
        }
    }
    if (eps <= 0.0 || eps >= 1.0) throw ConfigError("config: eps must lie in (0, 1)");
    if (mode == Mode::planted) {
        if (p_intra < 0.0 || p_intra >= 0.5) throw ConfigError("config: p_intra must lie in [0, 1/2)");
        if (p_cross <= 0.0 || p_cross >= 1.0) throw ConfigError("config: p_cross must lie in (0, 1)");
        if (k > 1 && std::min(p_cross, 1.0 - p_cross) <= p_intra) {
            throw ConfigError("config: cross noise must exceed intra noise (p_m > p_u)");
        }
    } else {
        if (p_succ <= 0.5 || p_succ > 1.0) throw ConfigError("config: p_succ must lie in (1/2, 1]");
        if (votes == 0) throw ConfigError("config: votes must be positive");
        if (ratio < 0.0 || ratio >= 1.0) throw ConfigError("config: ratio must lie in [0, 1)");
    }
    if (seeds.empty()) throw ConfigError("config: at least one seed required");
    if (copy_cap == 0) throw ConfigError("config: C must be at least 1");
}

std::vector<std::uint32_t> ExperimentConfig::resolved_domain_sizes() const {
    if (!domain_sizes.empty()) return domain_sizes;
    std::vector<std::uint32_t> sizes(k, n / k);
    for (std::uint32_t i = 0; i < n % k; ++i) sizes[i] += 1;
    return sizes;
}

PlantedSpec ExperimentConfig::planted_spec() const {
    if (mode != Mode::planted) throw ConfigError("config: not a planted experiment");
    PlantedSpec spec = PlantedSpec::uniform(k, n, p_intra, p_cross, bounds());
    spec.domain_sizes = resolved_domain_sizes();
    return spec;
}

VotingConfig ExperimentConfig::voting_config() const {
    if (mode != Mode::voting) throw ConfigError("config: not a voting experiment");
    VotingConfig vc;
    vc.p_mis = 1.0 - p_succ;
    vc.votes_intra = votes;
    vc.votes_cross = static_cast<std::uint32_t>(std::lround(ratio * votes));
    vc.poisson = poisson;
    return vc;
}

Bounds ExperimentConfig::bounds() const {
    if (mode == Mode::planted) {
        Bounds b;
        b.p_u = p_intra;
        b.p_m = std::min(p_cross, 1.0 - p_cross);
        b.k_u = resolved_k_u();
        return b;
    }
    return derive_bounds(voting_config(), resolved_k_u());
}

FindConfig ExperimentConfig::find_config() const {
    FindConfig fc;
    fc.depth = depth;
    fc.copy_cap = copy_cap;
    fc.sample_size = sample;
    fc.max_restarts = max_restarts;
    return fc;
}

QuickSortConfig ExperimentConfig::quicksort_config() const {
    return {quicksort_runs};
}

PurifyConfig ExperimentConfig::purify_config() const {
    PurifyConfig pc;
    pc.sample_coefficient = purify_a;
    pc.source = purify_source;
    return pc;
}

RankConfig ExperimentConfig::rank_config() const {
    RankConfig rc;
    rc.cluster.find = find_config();
    rc.cluster.quicksort = quicksort_config();
    rc.purify = purify_config();
    rc.purify_enabled = purify_on;
    return rc;
}

Gadget ExperimentConfig::make_gadget(std::uint64_t seed) const {
    Gadget g{transitive_tournament(0), 0, GadgetVerification::unverified};
    switch (gadget.kind) {
    case GadgetSpec::Kind::qr:
        g = quadratic_residue_gadget(gadget.param);
        break;
    case GadgetSpec::Kind::random:
        g = random_gadget(gadget.param, derive_seed(seed, 0x676164ULL));
        break;
    case GadgetSpec::Kind::file:
        g = load_gadget(gadget.path);
        return g; // trust the recorded verification
    }
    std::uint32_t ku = resolved_k_u();
    try {
        verify_gadget(g, ku, true);
    } catch (const SizeLimitError&) {
        verify_gadget(g, ku, false, 20000, derive_seed(seed, 0x766572ULL));
    }
    return g;
}

namespace {

std::vector<std::string> split_ws(const std::string& text) {
    std::istringstream ss(text);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

bool parse_bool(const std::string& v) {
    if (v == "on" || v == "true" || v == "1" || v == "yes") return true;
    if (v == "off" || v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("config: bad boolean '" + v + "'");
}

} // namespace

void ExperimentConfig::set(const std::string& key, const std::string& value) {
    try {
        if (key == "mode") {
            if (value == "planted") mode = Mode::planted;
            else if (value == "voting") mode = Mode::voting;
            else throw ConfigError("config: unknown mode '" + value + "'");
        } else if (key == "n") n = std::stoul(value);
        else if (key == "k") k = std::stoul(value);
        else if (key == "domain_sizes") {
            domain_sizes.clear();
            for (const auto& tok : split_ws(value)) domain_sizes.push_back(std::stoul(tok));
        } else if (key == "p_intra") p_intra = std::stod(value);
        else if (key == "p_cross") p_cross = std::stod(value);
        else if (key == "ratio") ratio = std::stod(value);
        else if (key == "p_succ") p_succ = std::stod(value);
        else if (key == "votes") votes = std::stoul(value);
        else if (key == "poisson") poisson = parse_bool(value);
        else if (key == "eps") eps = std::stod(value);
        else if (key == "k_u") k_u = std::stoul(value);
        else if (key == "gadget") {
            auto toks = split_ws(value);
            if (toks.size() == 2 && toks[0] == "qr") {
                gadget = {GadgetSpec::Kind::qr, static_cast<std::uint32_t>(std::stoul(toks[1])), ""};
            } else if (toks.size() == 2 && toks[0] == "random") {
                gadget = {GadgetSpec::Kind::random, static_cast<std::uint32_t>(std::stoul(toks[1])), ""};
            } else if (toks.size() == 2 && toks[0] == "file") {
                gadget = {GadgetSpec::Kind::file, 0, toks[1]};
            } else {
                throw ConfigError("config: gadget must be 'qr <p>', 'random <h>' or 'file <path>'");
            }
        } else if (key == "seeds") {
            seeds.clear();
            for (const auto& tok : split_ws(value)) seeds.push_back(std::stoull(tok));
        } else if (key == "quicksort_runs") quicksort_runs = std::stoul(value);
        else if (key == "C") copy_cap = std::stoul(value);
        else if (key == "depth") depth = std::stoul(value);
        else if (key == "sample") sample = std::stoul(value);
        else if (key == "max_restarts") max_restarts = std::stoul(value);
        else if (key == "purify") purify_on = parse_bool(value);
        else if (key == "purify_a") purify_a = std::stod(value);
        else if (key == "purify_source") {
            if (value == "regenerate") purify_source = PurifyConfig::Source::regenerate;
            else if (value == "split") purify_source = PurifyConfig::Source::vote_split;
            else throw ConfigError("config: purify_source must be regenerate or split");
        } else if (key == "queries") queries = std::stoull(value);
        else throw ConfigError("config: unknown key '" + key + "'");
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("config: bad value '" + value + "' for key '" + key + "'");
    }
}

ExperimentConfig ExperimentConfig::parse(std::istream& is) {
    ExperimentConfig cfg;
    std::string line;
    while (std::getline(is, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos) {
                throw ConfigError("config: expected 'key = value', got '" + line + "'");
            }
            continue;
        }
        auto trim = [](std::string s) {
            std::size_t a = s.find_first_not_of(" \t\r");
            if (a == std::string::npos) return std::string();
            std::size_t b = s.find_last_not_of(" \t\r");
            return s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("config: empty key in '" + line + "'");
        cfg.set(key, value);
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open config " + path);
    return parse(is);
}

std::string ExperimentConfig::to_text() const {
    std::ostringstream os;
    os << "mode = " << (mode == Mode::planted ? "planted" : "voting") << '\n';
    os << "n = " << n << '\n';
    os << "k = " << k << '\n';
    if (!domain_sizes.empty()) {
        os << "domain_sizes =";
        for (std::uint32_t s : domain_sizes) os << ' ' << s;
        os << '\n';
    }
    if (mode == Mode::planted) {
        os << "p_intra = " << p_intra << '\n';
        os << "p_cross = " << p_cross << '\n';
    } else {
        os << "ratio = " << ratio << '\n';
        os << "p_succ = " << p_succ << '\n';
        os << "votes = " << votes << '\n';
        if (poisson) os << "poisson = on\n";
    }
    os << "eps = " << eps << '\n';
    os << "k_u = " << resolved_k_u() << '\n';
    os << "gadget = ";
    switch (gadget.kind) {
    case GadgetSpec::Kind::qr: os << "qr " << gadget.param; break;
    case GadgetSpec::Kind::random: os << "random " << gadget.param; break;
    case GadgetSpec::Kind::file: os << "file " << gadget.path; break;
    }
    os << '\n';
    os << "seeds =";
    for (std::uint64_t s : seeds) os << ' ' << s;
    os << '\n';
    os << "quicksort_runs = " << quicksort_runs << '\n';
    os << "C = " << copy_cap << '\n';
    os << "depth = " << depth << '\n';
    os << "sample = " << sample << '\n';
    os << "max_restarts = " << max_restarts << '\n';
    os << "purify = " << (purify_on ? "on" : "off") << '\n';
    os << "purify_a = " << purify_a << '\n';
    os << "purify_source = "
       << (purify_source == PurifyConfig::Source::regenerate ? "regenerate" : "split")
       << '\n';
    os << "queries = " << queries << '\n';
    return os.str();
}

} // namespace hr

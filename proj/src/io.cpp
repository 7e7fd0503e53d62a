#include "heterorank/io.hpp"

#include <fstream>
#include <sstream>

namespace hr {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open " + path + " for writing");
    return os;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open " + path + " for reading");
    return is;
}

// Next non-comment, non-blank line; false at end of stream.
bool next_line(std::istream& is, std::string& line) {
    while (std::getline(is, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        if (start > 0 || line.back() == '\r') {
            std::size_t end = line.find_last_not_of(" \t\r");
            line = line.substr(start, end - start + 1);
        }
        return true;
    }
    return false;
}

std::vector<std::uint32_t> parse_vertices(const std::string& text) {
    std::istringstream ss(text);
    std::vector<std::uint32_t> out;
    std::uint32_t v;
    while (ss >> v) out.push_back(v);
    if (!ss.eof()) throw IoError("malformed vertex list: " + text);
    return out;
}

} // namespace

void write_tournament(std::ostream& os, const Tournament& t) {
    os << "tournament " << t.order() << '\n';
    for (const auto& [from, to] : t.edges()) {
        os << from << ' ' << to << '\n';
    }
}

Tournament read_tournament(std::istream& is) {
    std::string line;
    if (!next_line(is, line)) throw IoError("tournament file: missing header");
    std::istringstream header(line);
    std::string word;
    std::uint32_t n = 0;
    header >> word >> n;
    if (word != "tournament" || header.fail()) {
        throw IoError("tournament file: bad header '" + line + "'");
    }
    Tournament::Builder b(n);
    while (next_line(is, line)) {
        std::istringstream edge(line);
        std::uint32_t u, v;
        edge >> u >> v;
        if (edge.fail()) throw IoError("tournament file: bad edge line '" + line + "'");
        b.orient(u, v); // throws on duplicates / self pairs / range
    }
    return std::move(b).build_with_deletions();
}

void save_tournament(const std::string& path, const Tournament& t) {
    auto os = open_out(path);
    write_tournament(os, t);
}

Tournament load_tournament(const std::string& path) {
    auto is = open_in(path);
    return read_tournament(is);
}

void write_groundtruth(std::ostream& os, const GroundTruth& truth) {
    for (std::size_t d = 0; d < truth.domains.size(); ++d) {
        os << "domain " << d << ':';
        for (std::uint32_t v : truth.domains[d]) os << ' ' << v;
        os << '\n';
    }
}

GroundTruth read_groundtruth(std::istream& is) {
    std::vector<Ordering> domains;
    std::string line;
    while (next_line(is, line)) {
        std::size_t colon = line.find(':');
        if (colon == std::string::npos || line.rfind("domain ", 0) != 0) {
            throw IoError("groundtruth file: bad line '" + line + "'");
        }
        std::uint32_t id = 0;
        std::istringstream(line.substr(7, colon - 7)) >> id;
        if (id != domains.size()) throw IoError("groundtruth file: domains out of order");
        domains.push_back(parse_vertices(line.substr(colon + 1)));
    }
    GroundTruth g;
    g.domains = domains;
    std::uint32_t n = 0;
    for (const auto& d : domains) n += static_cast<std::uint32_t>(d.size());
    g.domain_of.assign(n, 0);
    g.pos_in_domain.assign(n, 0);
    g.global_order.reserve(n);
    for (std::size_t d = 0; d < domains.size(); ++d) {
        for (std::uint32_t pos = 0; pos < domains[d].size(); ++pos) {
            std::uint32_t v = domains[d][pos];
            if (v >= n) throw IoError("groundtruth file: vertex out of range");
            g.domain_of[v] = static_cast<std::uint32_t>(d);
            g.pos_in_domain[v] = pos;
            g.global_order.push_back(v);
        }
    }
    return g;
}

void save_groundtruth(const std::string& path, const GroundTruth& truth) {
    auto os = open_out(path);
    write_groundtruth(os, truth);
}

GroundTruth load_groundtruth(const std::string& path) {
    auto is = open_in(path);
    return read_groundtruth(is);
}

void write_partitioning(std::ostream& os, const Partitioning& partitioning) {
    for (std::size_t c = 0; c < partitioning.clusters.size(); ++c) {
        os << "cluster " << c << ':';
        partitioning.clusters[c].for_each([&](std::uint32_t v) { os << ' ' << v; });
        os << '\n';
    }
    os << "remainder:";
    partitioning.remainder.for_each([&](std::uint32_t v) { os << ' ' << v; });
    os << '\n';
}

Partitioning read_partitioning(std::istream& is, std::uint32_t n) {
    Partitioning p;
    p.remainder = VertexSet(n);
    std::string line;
    bool saw_remainder = false;
    while (next_line(is, line)) {
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) throw IoError("partitioning file: bad line '" + line + "'");
        auto vertices = parse_vertices(line.substr(colon + 1));
        if (line.rfind("cluster ", 0) == 0) {
            VertexSet s(n);
            for (std::uint32_t v : vertices) s.insert(v);
            p.clusters.push_back(std::move(s));
        } else if (line.rfind("remainder", 0) == 0) {
            for (std::uint32_t v : vertices) p.remainder.insert(v);
            saw_remainder = true;
        } else {
            throw IoError("partitioning file: bad line '" + line + "'");
        }
    }
    if (!saw_remainder) throw IoError("partitioning file: missing remainder line");
    return p;
}

void save_partitioning(const std::string& path, const Partitioning& partitioning) {
    auto os = open_out(path);
    write_partitioning(os, partitioning);
}

Partitioning load_partitioning(const std::string& path, std::uint32_t n) {
    auto is = open_in(path);
    return read_partitioning(is, n);
}

void write_nonoutliers(std::ostream& os, const VertexSet& r) {
    os << "nonoutliers:";
    r.for_each([&](std::uint32_t v) { os << ' ' << v; });
    os << '\n';
}

VertexSet read_nonoutliers(std::istream& is, std::uint32_t n) {
    std::string line;
    if (!next_line(is, line)) throw IoError("nonoutliers: missing line");
    std::size_t colon = line.find(':');
    if (colon == std::string::npos || line.rfind("nonoutliers", 0) != 0) {
        throw IoError("nonoutliers: bad line '" + line + "'");
    }
    VertexSet out(n);
    for (std::uint32_t v : parse_vertices(line.substr(colon + 1))) out.insert(v);
    return out;
}

void write_rank_model(std::ostream& os, const RankModel& model) {
    write_partitioning(os, model.partition);
    for (std::size_t c = 0; c < model.orderings.size(); ++c) {
        os << "order " << c << ':';
        for (std::uint32_t v : model.orderings[c]) os << ' ' << v;
        os << '\n';
    }
    write_nonoutliers(os, model.nonoutliers);
}

RankModel read_rank_model(std::istream& is, std::uint32_t n) {
    RankModel model;
    model.partition.remainder = VertexSet(n);
    model.nonoutliers = VertexSet(n);
    model.cluster_of.assign(n, -1);
    std::string line;
    while (next_line(is, line)) {
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) throw IoError("model file: bad line '" + line + "'");
        auto vertices = parse_vertices(line.substr(colon + 1));
        if (line.rfind("cluster ", 0) == 0) {
            VertexSet s(n);
            for (std::uint32_t v : vertices) s.insert(v);
            model.partition.clusters.push_back(std::move(s));
        } else if (line.rfind("remainder", 0) == 0) {
            for (std::uint32_t v : vertices) model.partition.remainder.insert(v);
        } else if (line.rfind("order ", 0) == 0) {
            model.orderings.push_back(vertices);
        } else if (line.rfind("nonoutliers", 0) == 0) {
            for (std::uint32_t v : vertices) model.nonoutliers.insert(v);
        } else {
            throw IoError("model file: bad line '" + line + "'");
        }
    }
    if (model.orderings.size() != model.partition.clusters.size()) {
        throw IoError("model file: ordering/cluster count mismatch");
    }
    for (std::size_t c = 0; c < model.partition.clusters.size(); ++c) {
        model.partition.clusters[c].for_each([&](std::uint32_t v) {
            model.cluster_of[v] = static_cast<std::int32_t>(c);
        });
    }
    return model;
}

void save_rank_model(const std::string& path, const RankModel& model) {
    auto os = open_out(path);
    write_rank_model(os, model);
}

RankModel load_rank_model(const std::string& path, std::uint32_t n) {
    auto is = open_in(path);
    return read_rank_model(is, n);
}

void write_gadget(std::ostream& os, const Gadget& gadget) {
    const char* mode = gadget.verified == GadgetVerification::exhaustive ? "exhaustive"
                       : gadget.verified == GadgetVerification::sampled  ? "sampled"
                                                                         : "unverified";
    os << "# gadget ku=" << gadget.k_u << " verified=" << mode << '\n';
    write_tournament(os, gadget.pattern);
}

Gadget read_gadget(std::istream& is) {
    // the header comment rides in front of the tournament body
    Gadget g{transitive_tournament(0), 0, GadgetVerification::unverified};
    std::ostringstream body;
    std::string line;
    while (std::getline(is, line)) {
        if (line.rfind("# gadget", 0) == 0) {
            std::istringstream ss(line);
            std::string tok;
            while (ss >> tok) {
                if (tok.rfind("ku=", 0) == 0) g.k_u = std::stoul(tok.substr(3));
                if (tok.rfind("verified=", 0) == 0) {
                    std::string mode = tok.substr(9);
                    g.verified = mode == "exhaustive" ? GadgetVerification::exhaustive
                                 : mode == "sampled"  ? GadgetVerification::sampled
                                                      : GadgetVerification::unverified;
                }
            }
            continue;
        }
        body << line << '\n';
    }
    std::istringstream rest(body.str());
    g.pattern = read_tournament(rest);
    return g;
}

void save_gadget(const std::string& path, const Gadget& gadget) {
    auto os = open_out(path);
    write_gadget(os, gadget);
}

Gadget load_gadget(const std::string& path) {
    auto is = open_in(path);
    return read_gadget(is);
}

} // namespace hr

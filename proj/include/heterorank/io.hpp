#ifndef HETERORANK_IO_HPP
#define HETERORANK_IO_HPP

#include <iosfwd>
#include <string>

#include "heterorank/clustering.hpp"
#include "heterorank/gadget.hpp"
#include "heterorank/model.hpp"
#include "heterorank/ranking.hpp"
#include "heterorank/tournament.hpp"

namespace hr {

// Tournament text format: first line "tournament <n>", then one line
// "<u> <v>" per present directed edge u -> v in (min, max) pair order.
// Pairs not listed are deleted. Lines starting with '#' are comments.
void write_tournament(std::ostream& os, const Tournament& t);
Tournament read_tournament(std::istream& is);
void save_tournament(const std::string& path, const Tournament& t);
Tournament load_tournament(const std::string& path);

// Groundtruth: one line per domain, "domain <id>: v0 v1 ..." in canonical
// order (highest rank first).
void write_groundtruth(std::ostream& os, const GroundTruth& truth);
GroundTruth read_groundtruth(std::istream& is);
void save_groundtruth(const std::string& path, const GroundTruth& truth);
GroundTruth load_groundtruth(const std::string& path);

// Partitioning: "cluster <id>: v0 v1 ...", final line "remainder: ...".
void write_partitioning(std::ostream& os, const Partitioning& partitioning);
Partitioning read_partitioning(std::istream& is, std::uint32_t n);
void save_partitioning(const std::string& path, const Partitioning& partitioning);
Partitioning load_partitioning(const std::string& path, std::uint32_t n);

// Rank model: partitioning lines, then "order <id>: ..." per cluster, then
// "nonoutliers: ...".
void write_rank_model(std::ostream& os, const RankModel& model);
RankModel read_rank_model(std::istream& is, std::uint32_t n);
void save_rank_model(const std::string& path, const RankModel& model);
RankModel load_rank_model(const std::string& path, std::uint32_t n);

void write_nonoutliers(std::ostream& os, const VertexSet& r);
VertexSet read_nonoutliers(std::istream& is, std::uint32_t n);

// Gadget: a header comment "# gadget ku=<k> verified=<mode>" followed by the
// tournament format.
void write_gadget(std::ostream& os, const Gadget& gadget);
Gadget read_gadget(std::istream& is);
void save_gadget(const std::string& path, const Gadget& gadget);
Gadget load_gadget(const std::string& path);

} // namespace hr

#endif

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace horo::cli {

struct SimulateOptions {
    std::string model = "hyperbolic";
    int d = 2;
    double R = 1.0;
    std::uint64_t n = 1000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    double cap = 1e8;
    std::string out;      ///< per-replication CSV; stdout when empty
    std::string summary;  ///< summary JSON; stdout when empty
    bool timestamp = false;
};

struct MomentsOptions {
    std::string model = "hyperbolic";
    int d = 2;
    double R = 1.0;
    std::string out;
};

struct BoundsOptions {
    std::string model = "hyperbolic";
    std::vector<int> d_grid;
    std::vector<double> R_list;
    std::optional<double> alpha;
    bool fixed_d = false;
    double threshold = 0.0;
    std::string format = "csv";
    std::string out;
};

struct VerifyOptions {
    std::string model = "hyperbolic";
    int d = 2;
    std::vector<double> R_list;
    std::uint64_t n = 100000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    double cap = 1e8;
    std::optional<double> kol_tol;
    std::string standardize = "analytic";
    std::string out;
};

struct RenderOptions {
    double R = 3.0;
    std::uint64_t seed = 1;
    double cap = 1e6;
    std::string out;
};

struct JTableOptions {
    std::string regime = "a";
    std::vector<int> d_grid;
    std::vector<double> R_list;
    std::optional<double> offset;
    std::optional<double> alpha;
    std::string out;
};

int cmd_simulate(const SimulateOptions& o, std::ostream& out);
int cmd_moments(const MomentsOptions& o, std::ostream& out);
int cmd_bounds(const BoundsOptions& o, std::ostream& out);
int cmd_verify_clt(const VerifyOptions& o, std::ostream& out);
int cmd_render(const RenderOptions& o, std::ostream& out);
int cmd_j_table(const JTableOptions& o, std::ostream& out);

}  // namespace horo::cli

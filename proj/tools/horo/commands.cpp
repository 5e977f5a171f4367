#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <sstream>

#include "horo/analytics.hpp"
#include "horo/empirics.hpp"
#include "horo/error.hpp"
#include "horo/euclidean.hpp"
#include "horo/sampler.hpp"
#include "output.hpp"

namespace horo::cli {

namespace {

using json = nlohmann::ordered_json;

const std::string kTool = std::string("horo ") + HORO_VERSION;

bool is_euclidean(const std::string& model)
{
    if (model == "euclidean") return true;
    if (model == "hyperbolic") return false;
    throw std::invalid_argument("unknown model '" + model + "'");
}

std::string utc_now()
{
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json header(const std::string& schema, const ConfigEcho& echo)
{
    json j;
    j["schema"] = schema;
    j["tool"] = kTool;
    j["config"] = echo_json(echo);
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<Realization> run_batch(bool euclid, const SimConfig& cfg, unsigned threads)
{
    return euclid ? simulate_euclid_batch(cfg, threads) : simulate_batch(cfg, threads);
}

struct AnalyticMoments {
    LogValue mean;
    LogValue variance;
};

AnalyticMoments analytic_moments(bool euclid, double R, int d)
{
    if (euclid) return {mean_euclid_closed(R, d), var_euclid_closed(R, d)};
    MomentSummary m = moments(R, Dimension(d));
    return {m.mean, m.variance};
}

// Samples divided by the analytic standard deviation, computed from logs so
// that large-d areas never pass through an overflowing exp.
std::vector<double> scaled_by_sd(const std::vector<Realization>& rs, double log_sd)
{
    std::vector<double> xs;
    xs.reserve(rs.size());
    for (const auto& r : rs) xs.push_back(r.log_area.is_zero() ? 0.0 : std::exp(r.log_area.log - log_sd));
    return xs;
}

}  // namespace

int cmd_simulate(const SimulateOptions& o, std::ostream& out)
{
    const bool euclid = is_euclidean(o.model);
    ConfigEcho echo = {{"command", "simulate"},       {"model", o.model},
                       {"d", std::to_string(o.d)},     {"R", format_double(o.R)},
                       {"n", std::to_string(o.n)},     {"seed", std::to_string(o.seed)},
                       {"cap", format_double(o.cap)}};

    SimConfig cfg{Dimension(o.d), o.R, o.n, o.seed, false, o.cap};
    auto rs = run_batch(euclid, cfg, o.threads);

    std::ostringstream csv;
    csv << "# horo simulate csv v1\n# " << echo_line(echo) << "\n";
    csv << "index,count,total_area,log_total_area\n";
    std::vector<double> areas;
    areas.reserve(rs.size());
    bool all_finite = true;
    double count_sum = 0.0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        const auto& r = rs[i];
        auto lin = r.total_area();
        all_finite = all_finite && lin.has_value();
        if (lin) areas.push_back(*lin);
        count_sum += static_cast<double>(r.count);
        csv << i << ',' << r.count << ',' << (lin ? format_double(*lin) : std::string()) << ','
            << (r.log_area.is_zero() ? std::string("-inf") : format_double(r.log_area.log)) << '\n';
    }

    json j = header("horo.simulate/1", echo);
    json s;
    const double n = static_cast<double>(rs.size());
    s["n"] = rs.size();
    s["mean_count"] = count_sum / n;
    if (all_finite && areas.size() >= 4) {
        KStatistics k = k_statistics(areas);
        s["mean"] = number_or_null(k.k1);
        s["variance"] = number_or_null(k.k2);
        s["k3"] = number_or_null(k.k3);
        s["k4"] = number_or_null(k.k4);
        s["se_mean"] = number_or_null(std::sqrt(k.k2 / n));
        s["se_variance"] = number_or_null(std::sqrt(std::max(0.0, k.k4 / n + 2.0 * k.k2 * k.k2 / (n - 1.0))));
    } else {
        for (const char* key : {"mean", "variance", "k3", "k4", "se_mean", "se_variance"}) s[key] = nullptr;
    }
    j["summary"] = s;
    AnalyticMoments am = analytic_moments(euclid, o.R, o.d);
    j["analytic"] = {{"mean", log_value_json(am.mean)}, {"variance", log_value_json(am.variance)}};
    if (o.timestamp) j["timestamp"] = utc_now();

    emit(o.out, csv.str(), out);
    emit(o.summary, dump(j), out);
    return 0;
}

int cmd_moments(const MomentsOptions& o, std::ostream& out)
{
    const bool euclid = is_euclidean(o.model);
    if (!(o.R > 0.0)) throw DomainError("R must be positive");
    ConfigEcho echo = {{"command", "moments"}, {"model", o.model}, {"d", std::to_string(o.d)}, {"R", format_double(o.R)}};
    json j = header("horo.moments/1", echo);
    if (euclid) {
        EuclidMoments m = euclid_moments(o.R, o.d);
        j["moments"] = {{"mean", log_value_json(m.mean)},
                        {"variance", log_value_json(m.variance)},
                        {"cum4", log_value_json(m.cum4)}};
        j["wass_bound"] = number_or_null(m.wass_bound);
    } else {
        Dimension d(o.d);
        IntegralSet set = integrals(o.R, d);
        MomentSummary m = moments(o.R, d);
        j["moments"] = {{"mean", log_value_json(m.mean)},
                        {"mean_plus", log_value_json(m.mean_plus)},
                        {"variance", log_value_json(m.variance)},
                        {"cum4_minus", log_value_json(m.cum4_minus)}};
        j["integrals"] = {{"log_C_d", set.log_C_d.log}, {"log_I1", set.log_I1.log},
                          {"log_I2", set.log_I2.log},   {"log_I4", set.log_I4.log},
                          {"J", set.J}};
    }
    emit(o.out, dump(j), out);
    return 0;
}

int cmd_bounds(const BoundsOptions& o, std::ostream& out)
{
    const bool euclid = is_euclidean(o.model);
    if (o.d_grid.empty()) throw std::invalid_argument("bounds: --d-grid is required");
    if (o.R_list.empty() == !o.alpha.has_value())
        throw std::invalid_argument("bounds: give exactly one of --R-list or --alpha");
    if (o.format != "csv" && o.format != "json") throw std::invalid_argument("bounds: --format must be csv or json");

    ConfigEcho echo = {{"command", "bounds"}, {"model", o.model}, {"d-grid", join(o.d_grid)}};
    if (o.alpha) echo.emplace_back("alpha", format_double(*o.alpha));
    else echo.emplace_back("R-list", join(o.R_list));
    if (!euclid) {
        if (o.fixed_d) echo.emplace_back("fixed-d", "true");
        echo.emplace_back("threshold", format_double(o.threshold));
    }
    echo.emplace_back("format", o.format);

    auto radii = [&](int d) {
        if (o.alpha) return std::vector<double>{*o.alpha * std::log(static_cast<double>(d))};
        return o.R_list;
    };

    json rows = json::array();
    std::ostringstream csv;
    csv << "# horo bounds csv v1\n# " << echo_line(echo) << "\n";
    if (euclid) {
        csv << "d,R,log_variance,log_cum4,wass_bound,normalized_ratio\n";
        for (int d : o.d_grid) {
            for (double R : radii(d)) {
                EuclidMoments m = euclid_moments(R, d);
                EuclidWassBound w = wass_bound_euclid(R, d);
                csv << d << ',' << format_double(R) << ',' << format_double(m.variance.log) << ','
                    << format_double(m.cum4.log) << ',' << format_double(w.bound) << ','
                    << format_double(w.normalized) << '\n';
                rows.push_back({{"d", d}, {"R", R}, {"log_variance", m.variance.log}, {"log_cum4", m.cum4.log},
                                {"wass_bound", w.bound}, {"normalized_ratio", w.normalized}});
            }
        }
    } else {
        csv << "d,R,J,wass_bound_J,wass_bound_integrals,kolmogorov_bound,rate_envelope,regime,on_boundary,"
               "alpha_envelope\n";
        EnvelopeOptions eo{o.fixed_d, o.threshold};
        for (int d : o.d_grid) {
            for (double R : radii(d)) {
                BoundReport b = rate_envelope(Dimension(d), R, eo);
                std::optional<double> alpha_env;
                if (o.alpha && d > 1) alpha_env = alpha_log_envelope(*o.alpha, d);
                csv << d << ',' << format_double(R) << ',' << format_double(b.J) << ','
                    << format_double(b.wass_bound_J) << ',' << format_double(b.wass_bound_integrals) << ','
                    << format_double(b.kolmogorov_bound) << ',' << format_double(b.rate_envelope) << ','
                    << to_string(b.regime) << ',' << (b.on_boundary ? "true" : "false") << ','
                    << (alpha_env ? format_double(*alpha_env) : std::string()) << '\n';
                json row = {{"d", d},
                            {"R", R},
                            {"J", b.J},
                            {"wass_bound_J", b.wass_bound_J},
                            {"wass_bound_integrals", b.wass_bound_integrals},
                            {"kolmogorov_bound", b.kolmogorov_bound},
                            {"rate_envelope", b.rate_envelope},
                            {"regime", std::string(to_string(b.regime))},
                            {"on_boundary", b.on_boundary}};
                row["alpha_envelope"] = alpha_env ? json(*alpha_env) : json(nullptr);
                rows.push_back(std::move(row));
            }
        }
    }

    if (o.format == "json") {
        json j = header("horo.bounds/1", echo);
        j["model"] = o.model;
        j["rows"] = std::move(rows);
        emit(o.out, dump(j), out);
    } else {
        emit(o.out, csv.str(), out);
    }
    return 0;
}

int cmd_verify_clt(const VerifyOptions& o, std::ostream& out)
{
    const bool euclid = is_euclidean(o.model);
    if (o.R_list.empty()) throw std::invalid_argument("verify-clt: --R-list is required");
    if (o.standardize != "analytic" && o.standardize != "empirical")
        throw std::invalid_argument("verify-clt: --standardize must be analytic or empirical");
    if (o.n < 4) throw std::invalid_argument("verify-clt: --n must be at least 4");
    const double target_variance = euclid ? 1.0 : 0.5;
    const double kol_tol = o.kol_tol.value_or(euclid ? 0.02 : 0.1);
    const double allowance = 1.5 / std::sqrt(static_cast<double>(o.n));

    ConfigEcho echo = {{"command", "verify-clt"},        {"model", o.model},
                       {"d", std::to_string(o.d)},        {"R-list", join(o.R_list)},
                       {"n", std::to_string(o.n)},        {"seed", std::to_string(o.seed)},
                       {"cap", format_double(o.cap)},     {"kol-tol", format_double(kol_tol)},
                       {"standardize", o.standardize}};

    json rows = json::array();
    std::vector<double> kols;
    bool w1_ok = true;
    for (double R : o.R_list) {
        SimConfig cfg{Dimension(o.d), R, o.n, o.seed, false, o.cap};
        json row = {{"R", R}};
        std::vector<Realization> rs;
        try {
            rs = run_batch(euclid, cfg, o.threads);
        } catch (const FeasibilityError& e) {
            row["feasible"] = false;
            row["reason"] = e.what();
            rows.push_back(std::move(row));
            continue;
        }
        row["feasible"] = true;

        AnalyticMoments am = analytic_moments(euclid, R, o.d);
        const double log_sd = 0.5 * am.variance.log;
        std::vector<double> xs = scaled_by_sd(rs, log_sd);
        EmpiricalSummary sum = (o.standardize == "analytic")
                                   ? summarize(xs, AnalyticScale{std::exp(am.mean.log - log_sd), 1.0}, target_variance)
                                   : summarize(xs, EmpiricalScale{}, target_variance);

        double bound = 0.0;
        if (euclid) {
            bound = wass_bound_euclid(R, o.d).bound;
        } else {
            IntegralSet set = integrals(R, Dimension(o.d));
            bound = wasserstein_bound_J(set);
            row["wass_bound_integrals"] = wasserstein_bound_integrals(set);
            row["kolmogorov_bound"] = kolmogorov_bound(bound);
        }
        const bool within = sum.d_wass1 <= bound + 3.0 * allowance;
        w1_ok = w1_ok && within;
        kols.push_back(sum.d_kol);

        // Sample moments are reported in the scale of S itself.
        const double sd = std::exp(log_sd);
        row["n"] = o.n;
        row["mean"] = number_or_null(sum.mean * sd);
        row["variance"] = number_or_null(sum.variance * sd * sd);
        row["excess_kurtosis"] = number_or_null(sum.k4 / (sum.variance * sum.variance));
        row["analytic_mean"] = log_value_json(am.mean);
        row["analytic_variance"] = log_value_json(am.variance);
        row["d_kol"] = sum.d_kol;
        row["d_wass1"] = sum.d_wass1;
        row["wass_bound"] = bound;
        row["allowance"] = allowance;
        row["w1_within_bound"] = within;
        rows.push_back(std::move(row));
    }
    if (kols.empty()) {
        // Every grid point was infeasible.
        throw FeasibilityError(log_hitting_mass(o.R_list.front(), Dimension(o.d)), o.cap);
    }

    bool decreasing = true;
    for (std::size_t i = 1; i < kols.size(); ++i) decreasing = decreasing && kols[i] < kols[i - 1];
    const bool final_ok = kols.back() <= kol_tol;

    json j = header("horo.verify_clt/1", echo);
    j["target_variance"] = target_variance;
    j["standardization"] = o.standardize;
    j["rows"] = std::move(rows);
    j["checks"] = {{"kol_decreasing", decreasing},
                   {"kol_final", {{"value", kols.back()}, {"tolerance", kol_tol}, {"pass", final_ok}}},
                   {"w1_within_bound", w1_ok}};
    j["status"] = (decreasing && final_ok && w1_ok) ? "PASS" : "FAIL";
    emit(o.out, dump(j), out);
    return 0;
}

int cmd_render(const RenderOptions& o, std::ostream& out)
{
    ConfigEcho echo = {{"command", "render"}, {"R", format_double(o.R)}, {"seed", std::to_string(o.seed)},
                       {"cap", format_double(o.cap)}};
    SimConfig cfg{Dimension(2), o.R, 1, o.seed, true, o.cap};
    validate(cfg);
    Realization r = simulate_total_area(cfg, 0);

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<!-- horo render svg v1 -->\n";
    svg << "<!-- " << echo_line(echo) << " -->\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" "
           "viewBox=\"-1.05 -1.05 2.1 2.1\">\n";
    svg << "  <defs><clipPath id=\"disc\"><circle cx=\"0\" cy=\"0\" r=\"1\"/></clipPath></defs>\n";
    svg << "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"black\" stroke-width=\"0.006\"/>\n";
    svg << "  <g clip-path=\"url(#disc)\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"0.004\">\n";
    for (const auto& h : r.points) {
        EuclideanCircle c = horocycle_disc_embedding(h);
        svg << "    <circle cx=\"" << format_double(c.center[0]) << "\" cy=\"" << format_double(c.center[1])
            << "\" r=\"" << format_double(c.radius) << "\" data-s=\"" << format_double(h.s) << "\"/>\n";
    }
    svg << "  </g>\n</svg>\n";
    emit(o.out, svg.str(), out);
    return 0;
}

int cmd_j_table(const JTableOptions& o, std::ostream& out)
{
    LemmaRegime regime;
    if (o.regime == "a") regime = LemmaRegime::a;
    else if (o.regime == "b1") regime = LemmaRegime::b1;
    else if (o.regime == "b2") regime = LemmaRegime::b2;
    else throw std::invalid_argument("j-table: --regime must be a, b1 or b2");

    int given = !o.R_list.empty() + o.offset.has_value() + o.alpha.has_value();
    if (given != 1) throw std::invalid_argument("j-table: give exactly one of --R-list, --offset, --alpha");

    ConfigEcho echo = {{"command", "j-table"}, {"regime", o.regime}, {"d-grid", join(o.d_grid)}};
    RRule rule;
    if (!o.R_list.empty()) {
        rule = RList{o.R_list};
        echo.emplace_back("R-list", join(o.R_list));
    } else if (o.offset) {
        rule = RLogOffset{*o.offset};
        echo.emplace_back("offset", format_double(*o.offset));
    } else {
        rule = RAlphaLog{*o.alpha};
        echo.emplace_back("alpha", format_double(*o.alpha));
    }

    auto rows = lemma_ratio_table(regime, o.d_grid, rule);
    std::ostringstream csv;
    csv << "# horo j-table csv v1\n# " << echo_line(echo) << "\n";
    csv << "regime,d,R,J,ratio\n";
    for (const auto& r : rows) {
        csv << o.regime << ',' << r.d << ',' << format_double(r.R) << ',' << format_double(r.J) << ','
            << format_double(r.ratio) << '\n';
    }
    emit(o.out, csv.str(), out);
    return 0;
}

}  // namespace horo::cli

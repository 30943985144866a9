#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hashfactor/factorization.hpp"
#include "hashfactor/ingest.hpp"

namespace hashfactor {

enum class Method {
    kHwmf,
    kMf,
    kKnn,
    kRandom,
};

std::string_view method_name(Method m);
Method parse_method(std::string_view name);

// Hold-out view of X: `heldout` and the masked matrix partition X's entries
// exactly; every held-out position has truth value 1.
struct EvalSplit {
    UserHashtagMatrix masked;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> heldout;
    double fraction = 0.0;
    std::uint64_t seed = 0;
};

// Uniform sample without replacement of round(fraction * nnz) entries.
// Rejects fractions that round to zero held-out entries.
EvalSplit make_split(const UserHashtagMatrix& x, double fraction, std::uint64_t seed);

double rmse(std::span<const double> pred, std::span<const double> truth);

struct ExperimentRow {
    Method method;
    double fraction;
    int d;
    std::uint64_t seed;
    double rmse;
    double runtime_s;
};

struct ExperimentReport {
    std::vector<ExperimentRow> rows;       // canonical grid order
    std::vector<std::string> failures;     // per-cell error descriptions
};

struct ExperimentOptions {
    TrainConfig train;                     // d and rng_seed overridden per cell
    WeightAveraging averaging = WeightAveraging::kAdoptedSetSize;
    // Rebuild Y from the masked tweets instead of keeping it as global side
    // information (sensitivity mode).
    bool strict_y_mask = false;
    int workers = 0;                       // 0 = library default
};

// Full grid: for each (method, fraction, d, seed) mask X, rebuild the
// method's weights from the masked view, train or score, and record RMSE
// over the held-out positives. Cell failures are recorded, not fatal.
ExperimentReport run_experiment(const InteractionDataset& data,
                                const std::vector<Method>& methods,
                                const std::vector<double>& fractions,
                                const std::vector<int>& dims,
                                const std::vector<std::uint64_t>& seeds,
                                const ExperimentOptions& options = {});

// CSV with header `method,fraction,d,seed,rmse,runtime_s`.
void write_report_csv(const ExperimentReport& report, std::ostream& out);

// Line chart of mean RMSE vs fraction, one polyline per method.
void write_report_svg(const ExperimentReport& report, std::ostream& out);

}  // namespace hashfactor

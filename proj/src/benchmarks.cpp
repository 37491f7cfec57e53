#include "benchmarks.hpp"

#include <array>
#include <cmath>
#include <numbers>

// Classic 23-function test suite (sphere through Shekel-10). Definitions,
// coefficient tables and search boxes follow the standard published forms of
// the named functions; known minima were cross-checked numerically against a
// high-precision reference optimizer before being frozen here.

namespace lxb {

namespace {

constexpr double kPi = std::numbers::pi;

double sphere(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

// Schwefel 2.22: sum of |x_i| plus product of |x_i|.
double schwefel_2_22(std::span<const double> x) {
    double sum = 0.0, prod = 1.0;
    for (double v : x) {
        sum += std::abs(v);
        prod *= std::abs(v);
    }
    return sum + prod;
}

// Schwefel 1.2: squared partial sums.
double schwefel_1_2(std::span<const double> x) {
    double total = 0.0, partial = 0.0;
    for (double v : x) {
        partial += v;
        total += partial * partial;
    }
    return total;
}

// Schwefel 2.21: max |x_i|.
double schwefel_2_21(std::span<const double> x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

double rosenbrock(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = x[i] - 1.0;
        s += 100.0 * a * a + b * b;
    }
    return s;
}

// De Jong's step function: floored coordinates, flat unit plateaus.
double step(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) {
        const double f = std::floor(v + 0.5);
        s += f * f;
    }
    return s;
}

// Quartic with additive uniform noise on [0, 1). The noise draw comes from
// the caller's stream so runs stay reproducible; without a stream only the
// deterministic part is returned.
double quartic_noise(std::span<const double> x, RngStream* noise) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double sq = x[i] * x[i];
        s += static_cast<double>(i + 1) * sq * sq;
    }
    return noise ? s + noise->uniform01() : s;
}

double schwefel(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s -= v * std::sin(std::sqrt(std::abs(v)));
    return s;
}

double rastrigin(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v - 10.0 * std::cos(2.0 * kPi * v) + 10.0;
    return s;
}

double ackley(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    double sq = 0.0, cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * kPi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + std::numbers::e;
}

double griewank(std::span<const double> x) {
    double sum = 0.0, prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += x[i] * x[i];
        prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return sum / 4000.0 - prod + 1.0;
}

// Generalized penalized function 1, with y_i = 1 + (x_i + 1)/4.
double penalized_1(std::span<const double> x) {
    const std::size_t n = x.size();
    auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
    double s = 10.0 * std::pow(std::sin(kPi * y(0)), 2);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double yi = y(i);
        const double sn = std::sin(kPi * y(i + 1));
        s += (yi - 1.0) * (yi - 1.0) * (1.0 + 10.0 * sn * sn);
    }
    const double yn = y(n - 1);
    s += (yn - 1.0) * (yn - 1.0);
    double pen = 0.0;
    for (double v : x) pen += penalty_u(v, 10.0, 100.0, 4.0);
    return kPi / static_cast<double>(n) * s + pen;
}

// Generalized penalized function 2.
double penalized_2(std::span<const double> x) {
    const std::size_t n = x.size();
    double s = std::pow(std::sin(3.0 * kPi * x[0]), 2);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double sn = std::sin(3.0 * kPi * x[i + 1]);
        s += (x[i] - 1.0) * (x[i] - 1.0) * (1.0 + sn * sn);
    }
    const double sn = std::sin(2.0 * kPi * x[n - 1]);
    s += (x[n - 1] - 1.0) * (x[n - 1] - 1.0) * (1.0 + sn * sn);
    double pen = 0.0;
    for (double v : x) pen += penalty_u(v, 5.0, 100.0, 4.0);
    return 0.1 * s + pen;
}

// Shekel's foxholes: 5x5 grid of wells at coordinates {-32,-16,0,16,32}^2.
double foxholes(std::span<const double> x) {
    static constexpr std::array<double, 5> grid = {-32.0, -16.0, 0.0, 16.0, 32.0};
    double s = 1.0 / 500.0;
    for (int j = 0; j < 25; ++j) {
        const double a0 = grid[j % 5];
        const double a1 = grid[j / 5];
        const double d0 = x[0] - a0;
        const double d1 = x[1] - a1;
        s += 1.0 / (static_cast<double>(j + 1) + std::pow(d0, 6) + std::pow(d1, 6));
    }
    return 1.0 / s;
}

// Kowalik's function, 4 variables, 11 data points (b given as 1/b_inv).
double kowalik(std::span<const double> x) {
    static constexpr std::array<double, 11> a = {0.1957, 0.1947, 0.1735, 0.16,   0.0844, 0.0627,
                                                 0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
    static constexpr std::array<double, 11> b_inv = {0.25, 0.5, 1.0, 2.0, 4.0, 6.0,
                                                     8.0,  10.0, 12.0, 14.0, 16.0};
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double b = 1.0 / b_inv[i];
        const double r = a[i] - x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
        s += r * r;
    }
    return s;
}

double six_hump_camel(std::span<const double> x) {
    const double x1 = x[0], x2 = x[1];
    const double x1sq = x1 * x1;
    return 4.0 * x1sq - 2.1 * x1sq * x1sq + x1sq * x1sq * x1sq / 3.0 + x1 * x2 -
           4.0 * x2 * x2 + 4.0 * x2 * x2 * x2 * x2;
}

double branin(std::span<const double> x) {
    const double x1 = x[0], x2 = x[1];
    const double t = x2 - 5.1 / (4.0 * kPi * kPi) * x1 * x1 + 5.0 / kPi * x1 - 6.0;
    return t * t + 10.0 * (1.0 - 1.0 / (8.0 * kPi)) * std::cos(x1) + 10.0;
}

double goldstein_price(std::span<const double> x) {
    const double x1 = x[0], x2 = x[1];
    const double u = x1 + x2 + 1.0;
    const double v = 2.0 * x1 - 3.0 * x2;
    const double p = 1.0 + u * u * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 +
                                    6.0 * x1 * x2 + 3.0 * x2 * x2);
    const double q = 30.0 + v * v * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 -
                                     36.0 * x1 * x2 + 27.0 * x2 * x2);
    return p * q;
}

// Hartmann 3-D coefficients.
constexpr std::array<std::array<double, 3>, 4> kHartmann3A = {{{3.0, 10.0, 30.0},
                                                               {0.1, 10.0, 35.0},
                                                               {3.0, 10.0, 30.0},
                                                               {0.1, 10.0, 35.0}}};
constexpr std::array<double, 4> kHartmannC = {1.0, 1.2, 3.0, 3.2};
constexpr std::array<std::array<double, 3>, 4> kHartmann3P = {{{0.3689, 0.117, 0.2673},
                                                               {0.4699, 0.4387, 0.747},
                                                               {0.1091, 0.8732, 0.5547},
                                                               {0.03815, 0.5743, 0.8828}}};

double hartmann3(std::span<const double> x) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        double e = 0.0;
        for (int j = 0; j < 3; ++j) {
            const double d = x[j] - kHartmann3P[i][j];
            e += kHartmann3A[i][j] * d * d;
        }
        s -= kHartmannC[i] * std::exp(-e);
    }
    return s;
}

// Hartmann 6-D coefficients.
constexpr std::array<std::array<double, 6>, 4> kHartmann6A = {
    {{10.0, 3.0, 17.0, 3.5, 1.7, 8.0},
     {0.05, 10.0, 17.0, 0.1, 8.0, 14.0},
     {3.0, 3.5, 1.7, 10.0, 17.0, 8.0},
     {17.0, 8.0, 0.05, 10.0, 0.1, 14.0}}};
constexpr std::array<std::array<double, 6>, 4> kHartmann6P = {
    {{0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
     {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
     {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
     {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}}};

double hartmann6(std::span<const double> x) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        double e = 0.0;
        for (int j = 0; j < 6; ++j) {
            const double d = x[j] - kHartmann6P[i][j];
            e += kHartmann6A[i][j] * d * d;
        }
        s -= kHartmannC[i] * std::exp(-e);
    }
    return s;
}

// Shekel family coefficients (m = 5, 7, 10 wells in 4-D).
constexpr std::array<std::array<double, 4>, 10> kShekelA = {{{4.0, 4.0, 4.0, 4.0},
                                                             {1.0, 1.0, 1.0, 1.0},
                                                             {8.0, 8.0, 8.0, 8.0},
                                                             {6.0, 6.0, 6.0, 6.0},
                                                             {3.0, 7.0, 3.0, 7.0},
                                                             {2.0, 9.0, 2.0, 9.0},
                                                             {5.0, 5.0, 3.0, 3.0},
                                                             {8.0, 1.0, 8.0, 1.0},
                                                             {6.0, 2.0, 6.0, 2.0},
                                                             {7.0, 3.6, 7.0, 3.6}}};
constexpr std::array<double, 10> kShekelC = {0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5};

double shekel(std::span<const double> x, int wells) {
    double s = 0.0;
    for (int i = 0; i < wells; ++i) {
        double d = kShekelC[i];
        for (int j = 0; j < 4; ++j) {
            const double t = x[j] - kShekelA[i][j];
            d += t * t;
        }
        s -= 1.0 / d;
    }
    return s;
}

std::vector<BenchmarkSpec> build_registry() {
    std::vector<BenchmarkSpec> regs;
    auto add = [&](int index, std::string name, int dim, double lo, double hi, double f_min,
                   std::vector<double> x_star, bool noisy = false) {
        regs.push_back({index, "F" + std::to_string(index), std::move(name), dim, lo, hi, f_min,
                        std::move(x_star), noisy});
    };
    auto fill = [](int dim, double v) { return std::vector<double>(dim, v); };

    add(1, "Sphere", 30, -100.0, 100.0, 0.0, fill(30, 0.0));
    add(2, "Schwefel 2.22", 30, -10.0, 10.0, 0.0, fill(30, 0.0));
    // Schwefel 1.2 is the squared-partial-sums form; transcriptions often
    // drop the inner sum.
    add(3, "Schwefel 1.2", 30, -100.0, 100.0, 0.0, fill(30, 0.0));
    add(4, "Schwefel 2.21", 30, -100.0, 100.0, 0.0, fill(30, 0.0));
    add(5, "Rosenbrock", 30, -30.0, 30.0, 0.0, fill(30, 1.0));
    // De Jong's step: floored coordinates, not the plain quadratic.
    add(6, "Step", 30, -100.0, 100.0, 0.0, fill(30, 0.0));
    // Noisy objective: only the deterministic part has a fixed minimum.
    add(7, "Quartic with noise", 30, -1.28, 1.28, 0.0, fill(30, 0.0), true);
    // Minimum is -418.9829 per dimension (-4189.83 at the 10-D size used here).
    add(8, "Schwefel", 10, -500.0, 500.0, -4189.828872724331, fill(10, 420.96874054552984));
    add(9, "Rastrigin", 30, -5.12, 5.12, 0.0, fill(30, 0.0));
    // Ackley's cosine term averages over dimensions (1/n inside the exp).
    add(10, "Ackley", 30, -32.0, 32.0, 0.0, fill(30, 0.0));
    add(11, "Griewank", 30, -600.0, 600.0, 0.0, fill(30, 0.0));
    add(12, "Penalized 1", 30, -50.0, 50.0, 0.0, fill(30, -1.0));
    add(13, "Penalized 2", 30, -50.0, 50.0, 0.0, fill(30, 1.0));
    // Classic foxholes box is [-65.536, 65.536]^2; the minimum sits near
    // (-32, -32) at about 0.998, not exactly 1.
    add(14, "Shekel's foxholes", 2, -65.536, 65.536, 0.9980038377944498,
        {-31.97833337797648, -31.978334007870856});
    // Kowalik is a 4-variable least-squares fit (the formula uses x_4).
    add(15, "Kowalik", 4, -5.0, 5.0, 0.0003074859878056051,
        {0.19283345304274813, 0.19083624027597035, 0.12311729907598003, 0.13576599033984466});
    // Six-hump camel is 2-D with minimum -1.03163, often mislabeled 0.398.
    add(16, "Six-hump camel", 2, -5.0, 5.0, -1.0316284534898776,
        {0.08984201652927098, -0.7126564013807202});
    // Branin, 2-D; the minimum 5/(4*pi) at (pi, 2.275) lies inside [-5, 5]^2.
    add(17, "Branin", 2, -5.0, 5.0, 0.3978873577297384, {kPi, 2.275});
    // Goldstein-Price, 2-D; needs its classic [-2, 2]^2 box for (0, -1) to be
    // reachable.
    add(18, "Goldstein-Price", 2, -2.0, 2.0, 3.0, {0.0, -1.0});
    // Hartmann 3-D lives on the unit cube with minimum -3.86278.
    add(19, "Hartmann 3-D", 3, 0.0, 1.0, -3.8627821478207554,
        {0.11461433654805793, 0.5556488495457383, 0.8525469525477655});
    // Hartmann 6-D minimum is -3.32237 (sometimes confused with Shekel's).
    add(20, "Hartmann 6-D", 6, 0.0, 1.0, -3.322368011415515,
        {0.20168951037717156, 0.150010691466166, 0.4768739733716025, 0.27533242885448195,
         0.3116516165628256, 0.6573005308460204});
    add(21, "Shekel 5", 4, 0.0, 10.0, -10.153199679058229,
        {4.000037152376549, 4.000133278657566, 4.000037151057555, 4.000133277090425});
    add(22, "Shekel 7", 4, 0.0, 10.0, -10.402940566818662,
        {4.000572914277084, 4.000689366040889, 3.9994897107938447, 3.9996061600067923});
    add(23, "Shekel 10", 4, 0.0, 10.0, -10.536409816692046,
        {4.000746533201553, 4.000592934538832, 3.9996633972202558, 3.9995098012852255});
    return regs;
}

class BenchmarkProblem final : public ObjectiveProblem {
public:
    explicit BenchmarkProblem(const BenchmarkSpec& spec)
        : ObjectiveProblem(spec.id, spec.name,
                           SearchSpace::cube(spec.dim, spec.lower, spec.upper)),
          spec_(spec) {}

    double evaluate(std::span<const double> x, RngStream* noise) const override {
        check_dim(x);
        return evaluate_benchmark(spec_.index, x, noise);
    }

    bool is_noisy() const override { return spec_.noisy; }
    std::optional<double> known_minimum() const override { return spec_.f_min; }
    std::optional<std::vector<double>> known_minimizer() const override {
        if (spec_.x_star.empty()) return std::nullopt;
        return spec_.x_star;
    }

private:
    BenchmarkSpec spec_;
};

} // namespace

const std::vector<BenchmarkSpec>& benchmark_registry() {
    static const std::vector<BenchmarkSpec> registry = build_registry();
    return registry;
}

double penalty_u(double x, double a, double k, double m) {
    if (x > a) return k * std::pow(x - a, m);
    if (x < -a) return k * std::pow(-x - a, m);
    return 0.0;
}

double evaluate_benchmark(int index, std::span<const double> x, RngStream* noise) {
    const auto& registry = benchmark_registry();
    if (index < 1 || index > static_cast<int>(registry.size())) {
        throw StructuralError("benchmark index out of range");
    }
    if (static_cast<int>(x.size()) != registry[index - 1].dim) {
        throw StructuralError(registry[index - 1].id + ": position has wrong dimension");
    }
    switch (index) {
        case 1: return sphere(x);
        case 2: return schwefel_2_22(x);
        case 3: return schwefel_1_2(x);
        case 4: return schwefel_2_21(x);
        case 5: return rosenbrock(x);
        case 6: return step(x);
        case 7: return quartic_noise(x, noise);
        case 8: return schwefel(x);
        case 9: return rastrigin(x);
        case 10: return ackley(x);
        case 11: return griewank(x);
        case 12: return penalized_1(x);
        case 13: return penalized_2(x);
        case 14: return foxholes(x);
        case 15: return kowalik(x);
        case 16: return six_hump_camel(x);
        case 17: return branin(x);
        case 18: return goldstein_price(x);
        case 19: return hartmann3(x);
        case 20: return hartmann6(x);
        case 21: return shekel(x, 5);
        case 22: return shekel(x, 7);
        case 23: return shekel(x, 10);
        default: throw StructuralError("benchmark index out of range");
    }
}

std::unique_ptr<ObjectiveProblem> make_benchmark(int index) {
    const auto& registry = benchmark_registry();
    if (index < 1 || index > static_cast<int>(registry.size())) {
        throw StructuralError("benchmark index out of range");
    }
    return std::make_unique<BenchmarkProblem>(registry[index - 1]);
}

} // namespace lxb

#include "vc4/branching.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace vc4 {
namespace {

double residual(std::span<const double> v, double x) {
    double sum = 0.0;
    for (double a : v)
        sum += std::pow(x, -a);
    return sum - 1.0;
}

long parse_integer(std::string_view s) {
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("bad number in branching vector: '" + std::string(s) + "'");
    return value;
}

}  // namespace

double branching_number(std::span<const double> vector) {
    if (vector.empty())
        throw std::invalid_argument("branching vector is empty");
    for (double a : vector)
        if (!(a > 0.0))
            throw std::invalid_argument("branching vector entries must be positive");
    if (vector.size() == 1)
        return 1.0;

    // residual is strictly decreasing in x and positive just above 1.
    double lo = 1.0, hi = 2.0;
    while (residual(vector, hi) > 0.0)
        hi *= 2.0;
    for (int iter = 0; iter < 200 && hi - lo > 1e-14; ++iter) {
        double mid = 0.5 * (lo + hi);
        (residual(vector, mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double branching_number_thirds(std::span<const int> thirds) {
    std::vector<double> v;
    v.reserve(thirds.size());
    for (int t : thirds)
        v.push_back(t / 3.0);
    return branching_number(v);
}

std::vector<double> parse_branching_vector(std::string_view text) {
    std::vector<double> out;
    while (!text.empty()) {
        auto comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        auto slash = item.find('/');
        if (slash == std::string_view::npos) {
            out.push_back(static_cast<double>(parse_integer(item)));
        } else {
            long num = parse_integer(item.substr(0, slash));
            long den = parse_integer(item.substr(slash + 1));
            if (den == 0)
                throw std::invalid_argument("zero denominator in branching vector");
            out.push_back(static_cast<double>(num) / static_cast<double>(den));
        }
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    if (out.empty())
        throw std::invalid_argument("branching vector is empty");
    return out;
}

}  // namespace vc4

#include "riesz/sphere.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "riesz/common.hpp"
#include "riesz/quadrature.hpp"
#include "riesz/rng.hpp"

namespace riesz {

namespace {

double norm2(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

std::string hash_key(std::span<const double> x) {
    std::string key(x.size() * sizeof(double), '\0');
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double v = x[i] + 0.0;  // fold -0.0 into +0.0
        std::memcpy(key.data() + i * sizeof(double), &v, sizeof(double));
    }
    return key;
}

}  // namespace

SpherePoint::SpherePoint(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 3) throw std::invalid_argument("SpherePoint: needs d >= 2, i.e. >= 3 coordinates");
    const double n = norm2(coords_);
    if (!(std::abs(n - 1.0) <= 1e-12))
        throw std::invalid_argument("SpherePoint: vector is not unit length (|norm-1| > 1e-12)");
}

SpherePoint SpherePoint::normalized(std::vector<double> coords) {
    const double n = norm2(coords);
    if (!(n > 0.0) || !std::isfinite(n))
        throw std::invalid_argument("SpherePoint::normalized: zero or non-finite vector");
    for (double& v : coords) v /= n;
    return SpherePoint(std::move(coords));
}

SLabel SLabel::riesz(double s) {
    if (!(s >= 0.0)) throw std::invalid_argument("SLabel: s must be >= 0");
    return {s, s == 0.0};
}

std::string SLabel::str() const { return is_log ? "log" : format_double(value); }

Configuration::Configuration(int d, std::vector<double> flat_coords, ConfigMeta meta)
    : d_(d), coords_(std::move(flat_coords)), meta_(std::move(meta)) {
    if (d_ < 2) throw std::invalid_argument("Configuration: d must be >= 2");
    const std::size_t width = static_cast<std::size_t>(d_) + 1;
    if (coords_.empty() || coords_.size() % width != 0)
        throw std::invalid_argument("Configuration: coordinate count is not a multiple of d+1");
    n_ = static_cast<int>(coords_.size() / width);
    std::unordered_set<std::string> seen;
    seen.reserve(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        const auto p = point(i);
        const double n = norm2(p);
        if (!(std::abs(n - 1.0) <= 1e-12))
            throw std::invalid_argument("Configuration: point " + std::to_string(i) + " is not unit length");
        if (!seen.insert(hash_key(p)).second)
            throw std::invalid_argument("Configuration: point " + std::to_string(i) + " repeats an earlier point");
    }
}

Cap::Cap(SpherePoint c, double r) : center(std::move(c)), radius(r) {
    if (!(r > 0.0 && r <= 2.0)) throw std::invalid_argument("Cap: radius must lie in (0, 2]");
}

bool Cap::contains(std::span<const double> y) const {
    const auto c = center.view();
    if (y.size() != c.size()) throw std::invalid_argument("Cap::contains: dimension mismatch");
    double dot = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) dot += c[k] * y[k];
    return dot > 1.0 - 0.5 * radius * radius;
}

Cap::Counts Cap::count(const Configuration& config) const {
    const auto c = center.view();
    if (config.dim() != center.dim()) throw std::invalid_argument("Cap::count: dimension mismatch");
    const double threshold = 1.0 - 0.5 * radius * radius;
    Counts out;
    for (int i = 0; i < config.size(); ++i) {
        const auto p = config.point(i);
        double dot = 0.0;
        for (std::size_t k = 0; k < c.size(); ++k) dot += c[k] * p[k];
        if (dot > threshold) ++out.strict;
        if (dot >= threshold) ++out.closed;
    }
    return out;
}

Configuration sample_uniform(int d, int n, std::uint64_t seed) {
    if (d < 2) throw std::invalid_argument("sample_uniform: d must be >= 2");
    if (n < 1) throw std::invalid_argument("sample_uniform: n must be >= 1");
    CounterRng rng(seed, rng_stream::kSampleUniform);
    const int width = d + 1;
    std::vector<double> flat(static_cast<std::size_t>(n) * width);
    for (int i = 0; i < n; ++i) {
        double* p = flat.data() + static_cast<std::size_t>(i) * width;
        double nrm = 0.0;
        do {
            nrm = 0.0;
            for (int k = 0; k < width; ++k) {
                p[k] = rng.next_gaussian();
                nrm += p[k] * p[k];
            }
            nrm = std::sqrt(nrm);
        } while (!(nrm > 1e-8));
        for (int k = 0; k < width; ++k) p[k] /= nrm;
    }
    ConfigMeta meta;
    meta.s = SLabel::logarithmic();
    meta.seed = seed;
    return Configuration(d, std::move(flat), meta);
}

double cap_area_height(int d, double one_minus_t) {
    if (d < 2) throw std::invalid_argument("cap_area_height: d must be >= 2");
    if (!(one_minus_t >= 0.0 && one_minus_t <= 2.0))
        throw std::invalid_argument("cap_area_height: height must lie in [0, 2]");
    if (one_minus_t == 0.0) return 0.0;
    const double h = one_minus_t;
    const double ring = sphere_area(d - 1);
    // t = 1 - h*v keeps 1 - t^2 = h*v*(2 - h*v) cancellation-free for tiny caps.
    const double expo = 0.5 * (d - 2);
    auto g = [&](double v) { return std::pow(h * v * (2.0 - h * v), expo); };
    const double tol = 1e-12 / (ring * h);
    return ring * h * integrate(g, 0.0, 1.0, std::max(tol, 1e-16));
}

double cap_area(int d, double r) {
    if (d < 2) throw std::invalid_argument("cap_area: d must be >= 2");
    if (!(r > 0.0 && r <= 2.0)) throw std::invalid_argument("cap_area: r must lie in (0, 2]");
    return cap_area_height(d, 0.5 * r * r);
}

SeparationStats separation(const Configuration& config) {
    const int n = config.size();
    if (n < 2) throw std::invalid_argument("separation: needs at least 2 points");
    const int width = config.dim() + 1;
    const double* pts = config.coords().data();
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        const double* a = pts + static_cast<std::size_t>(i) * width;
        for (int j = i + 1; j < n; ++j) {
            const double* b = pts + static_cast<std::size_t>(j) * width;
            double d2 = 0.0;
            for (int k = 0; k < width; ++k) {
                const double diff = a[k] - b[k];
                d2 += diff * diff;
            }
            best = std::min(best, d2);
        }
    }
    const double min_dist = std::sqrt(best);
    return {min_dist, min_dist * std::pow(static_cast<double>(n), 1.0 / config.dim())};
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_double17(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::scientific, 16);
    return std::string(buf, res.ptr);
}

void write_config(const Configuration& config, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_config: cannot open " + path);
    out << "# sphpts v1 d=" << config.dim() << " n=" << config.size()
        << " s=" << config.meta().s.str() << " seed=" << config.meta().seed << "\n";
    const int width = config.dim() + 1;
    for (int i = 0; i < config.size(); ++i) {
        const auto p = config.point(i);
        for (int k = 0; k < width; ++k) {
            if (k) out << ' ';
            out << format_double17(p[k]);
        }
        out << "\n";
    }
    if (!out) throw std::runtime_error("write_config: write failure on " + path);
}

namespace {

bool parse_field(const std::string& header, const std::string& key, std::string& out) {
    const auto pos = header.find(" " + key + "=");
    if (pos == std::string::npos) return false;
    const auto start = pos + key.size() + 2;
    auto end = header.find(' ', start);
    if (end == std::string::npos) end = header.size();
    out = header.substr(start, end - start);
    return !out.empty();
}

double parse_double(const std::string& tok, std::size_t line) {
    double v = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last || !std::isfinite(v))
        throw parse_error("bad float '" + tok + "' at line " + std::to_string(line), line);
    return v;
}

}  // namespace

Configuration read_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("read_config: cannot open " + path, 0);
    std::string header;
    if (!std::getline(in, header)) throw parse_error("missing header line", 1);
    if (!header.empty() && header.back() == '\r') header.pop_back();
    if (header.rfind("# sphpts v1 ", 0) != 0)
        throw parse_error("malformed header (expected '# sphpts v1 ...') at line 1", 1);
    std::string d_str, n_str, s_str, seed_str;
    if (!parse_field(header, "d", d_str) || !parse_field(header, "n", n_str) ||
        !parse_field(header, "s", s_str) || !parse_field(header, "seed", seed_str))
        throw parse_error("header missing one of d=, n=, s=, seed= at line 1", 1);

    int d = 0, n = 0;
    std::uint64_t seed = 0;
    if (std::from_chars(d_str.data(), d_str.data() + d_str.size(), d).ec != std::errc() || d < 2)
        throw parse_error("bad dimension in header at line 1", 1);
    if (std::from_chars(n_str.data(), n_str.data() + n_str.size(), n).ec != std::errc() || n < 1)
        throw parse_error("bad point count in header at line 1", 1);
    if (std::from_chars(seed_str.data(), seed_str.data() + seed_str.size(), seed).ec != std::errc())
        throw parse_error("bad seed in header at line 1", 1);
    SLabel s;
    if (s_str == "log") {
        s = SLabel::logarithmic();
    } else {
        s = SLabel::riesz(parse_double(s_str, 1));
    }

    const int width = d + 1;
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(n) * width);
    std::string line;
    for (int i = 0; i < n; ++i) {
        const std::size_t line_no = static_cast<std::size_t>(i) + 2;
        if (!std::getline(in, line))
            throw parse_error("unexpected end of file at line " + std::to_string(line_no), line_no);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (static_cast<int>(toks.size()) != width)
            throw parse_error("expected " + std::to_string(width) + " coordinates, got " +
                                  std::to_string(toks.size()) + " at line " + std::to_string(line_no),
                              line_no);
        double nrm2 = 0.0;
        std::vector<double> p(width);
        for (int k = 0; k < width; ++k) {
            p[k] = parse_double(toks[k], line_no);
            nrm2 += p[k] * p[k];
        }
        const double nrm = std::sqrt(nrm2);
        if (!(std::abs(nrm - 1.0) <= 1e-9))
            throw parse_error("point is not unit length (|norm-1| > 1e-9) at line " +
                                  std::to_string(line_no),
                              line_no);
        // Keep exact bits when already within the type invariant; only points
        // from looser sources get renormalized.
        if (std::abs(nrm - 1.0) > 1e-12)
            for (double& v : p) v /= nrm;
        flat.insert(flat.end(), p.begin(), p.end());
    }
    ConfigMeta meta;
    meta.s = s;
    meta.seed = seed;
    return Configuration(d, std::move(flat), meta);
}

}  // namespace riesz

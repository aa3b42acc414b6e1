#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace riesz {

/// A point on S^d stored as a unit vector in R^{d+1}.
/// Constructor enforces | ||x|| - 1 | <= 1e-12.
class SpherePoint {
public:
    explicit SpherePoint(std::vector<double> coords);

    /// Scales an arbitrary nonzero vector onto the sphere.
    static SpherePoint normalized(std::vector<double> coords);

    int dim() const { return static_cast<int>(coords_.size()) - 1; }
    const std::vector<double>& coords() const { return coords_; }
    std::span<const double> view() const { return coords_; }

private:
    std::vector<double> coords_;
};

/// Which energy a point set was produced for: a Riesz exponent, or the
/// logarithmic kernel (serialized as "log", held as value 0).
struct SLabel {
    double value = 0.0;
    bool is_log = true;

    static SLabel logarithmic() { return {0.0, true}; }
    static SLabel riesz(double s);
    std::string str() const;
};

struct ConfigMeta {
    SLabel s;
    std::uint64_t seed = 0;
    std::optional<double> energy;
    std::optional<double> grad_norm;
};

/// An N-point configuration on S^d with provenance metadata. Coordinates are
/// a flat row-major array of N*(d+1) doubles (pairwise kernels iterate it).
class Configuration {
public:
    Configuration(int d, std::vector<double> flat_coords, ConfigMeta meta);

    int dim() const { return d_; }
    int size() const { return n_; }
    std::span<const double> coords() const { return coords_; }
    std::span<const double> point(int i) const {
        return std::span<const double>(coords_).subspan(static_cast<std::size_t>(i) * (d_ + 1), d_ + 1);
    }
    const ConfigMeta& meta() const { return meta_; }
    ConfigMeta& meta() { return meta_; }

private:
    int d_;
    int n_;
    std::vector<double> coords_;
    ConfigMeta meta_;
};

/// Open spherical cap of Euclidean chord radius r around a center:
/// y is inside iff |y - center| < r, i.e. <center, y> > 1 - r^2/2.
struct Cap {
    SpherePoint center;
    double radius;

    Cap(SpherePoint c, double r);

    bool contains(std::span<const double> y) const;

    struct Counts {
        long strict = 0;  // <c,y> >  threshold (the open cap itself)
        long closed = 0;  // <c,y> >= threshold (boundary included)
    };
    /// The discrepancy supremum lives on cap boundaries, so both counts matter.
    Counts count(const Configuration& config) const;
};

/// n i.i.d. points from the normalized surface measure on S^d; deterministic
/// in (seed); each point is a normalized (d+1)-vector of standard normals.
Configuration sample_uniform(int d, int n, std::uint64_t seed);

/// Surface measure sigma(D_r) of a cap of chord radius r in S^d, via
/// omega_{d-1} * integral_{1-r^2/2}^{1} (1-t^2)^{(d-2)/2} dt (adaptive
/// Gauss-Legendre, absolute tolerance 1e-12).
double cap_area(int d, double r);

/// sigma({y : <c,y> > t}) parameterized by the height 1 - t, which callers
/// can form without cancellation. `one_minus_t` in [0, 2].
double cap_area_height(int d, double one_minus_t);

struct SeparationStats {
    double min_dist;
    double scaled;  // min_dist * N^{1/d}
};

/// Minimal pairwise chord distance, plus the N^{1/d}-scaled value.
SeparationStats separation(const Configuration& config);

/// SPHPTS v1 text format:
///   # sphpts v1 d=<d> n=<N> s=<s|log> seed=<u64>
/// then N lines of d+1 decimal floats, 17 significant digits each,
/// space-separated, LF endings. Round-trips doubles exactly.
Configuration read_config(const std::string& path);
void write_config(const Configuration& config, const std::string& path);

/// Shortest decimal string that round-trips the double exactly.
std::string format_double(double v);
/// 17-significant-digit scientific form used by SPHPTS and CSV output.
std::string format_double17(double v);

}  // namespace riesz

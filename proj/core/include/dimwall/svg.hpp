#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace dimwall::svg {

/// A minimal deterministic line/scatter plot writer. Output depends only on
/// the data handed to it, so identical runs produce identical bytes.
class Plot {
public:
    Plot(std::string title, std::string x_label, std::string y_label);

    void add_line(std::vector<double> xs, std::vector<double> ys, std::string label);
    void add_points(std::vector<double> xs, std::vector<double> ys, std::string label);
    void add_hline(double y, std::string label);

    // Force axis bounds instead of auto-fitting the data.
    void set_x_range(double lo, double hi);
    void set_y_range(double lo, double hi);

    std::string render() const;
    void write(const std::filesystem::path& path) const;

private:
    struct Series {
        std::vector<double> xs, ys;
        std::string label;
        bool line = true;
    };

    std::string title_, x_label_, y_label_;
    std::vector<Series> series_;
    bool has_x_range_ = false, has_y_range_ = false;
    double x_lo_ = 0, x_hi_ = 1, y_lo_ = 0, y_hi_ = 1;
};

} // namespace dimwall::svg

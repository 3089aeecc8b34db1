#include "zakgabor/transforms.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace zakgabor {

Window make_window(const FiniteAbelianGroup& g, Eigen::VectorXcd values) {
    if (values.size() != g.order()) throw std::invalid_argument("window length != group order");
    for (Eigen::Index i = 0; i < values.size(); ++i)
        if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag()))
            throw std::invalid_argument("window has non-finite entries");
    return Window{g, std::move(values)};
}

Window delta_window(const FiniteAbelianGroup& g) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(g.order());
    v[0] = 1.0;
    return Window{g, std::move(v)};
}

Window constant_window(const FiniteAbelianGroup& g, std::complex<double> c) {
    return Window{g, Eigen::VectorXcd::Constant(g.order(), c)};
}

double window_norm(const Window& f) { return f.values.norm(); }

Window translate(const Window& f, const GroupElement& a) {
    const auto& g = f.group;
    Eigen::VectorXcd out(g.order());
    const std::int64_t ai = g.index_of(a);
    for (std::int64_t x = 0; x < g.order(); ++x) out[x] = f.values[g.sub_indices(x, ai)];
    return Window{g, std::move(out)};
}

Window modulate(const Window& f, const GroupElement& gamma) {
    const auto& g = f.group;
    Eigen::VectorXcd out(g.order());
    for (std::int64_t x = 0; x < g.order(); ++x)
        out[x] = character_value(g, g.element_at(x), gamma) * f.values[x];
    return Window{g, std::move(out)};
}

Window fourier(const Window& f) {
    const auto& g = f.group;
    const auto d = g.dual();
    Eigen::VectorXcd out(g.order());
    for (std::int64_t xi = 0; xi < d.order(); ++xi) {
        const GroupElement xie = d.element_at(xi);
        std::complex<double> acc = 0.0;
        for (std::int64_t x = 0; x < g.order(); ++x)
            acc += f.values[x] * std::conj(character_value(g, g.element_at(x), xie));
        out[xi] = acc;
    }
    return Window{d, std::move(out)};
}

Window inverse_fourier(const Window& big_f) {
    const auto d = big_f.group;  // lives on the dual
    const auto g = d.dual();
    Eigen::VectorXcd out(g.order());
    const double scale = 1.0 / static_cast<double>(g.order());
    for (std::int64_t x = 0; x < g.order(); ++x) {
        const GroupElement xe = g.element_at(x);
        std::complex<double> acc = 0.0;
        for (std::int64_t xi = 0; xi < d.order(); ++xi)
            acc += big_f.values[xi] * character_value(g, xe, d.element_at(xi));
        out[x] = scale * acc;
    }
    return Window{g, std::move(out)};
}

ZakArray zak(const Window& f, const Subgroup& h) {
    const auto& g = f.group;
    if (!(h.parent() == g)) throw std::invalid_argument("zak: subgroup of a different group");
    ZakArray z{g, h, {}, {}, {}, weil_chain(g, h), {}, {}, {}};
    z.row_transversal = transversal(g, h);
    const Subgroup hperp = annihilator(g, h);
    z.col_transversal = transversal(g.dual(), hperp);

    // Reduction tables.
    z.row_of.assign(g.order(), -1);
    z.h_part_of.assign(g.order(), -1);
    for (std::size_t r = 0; r < z.row_transversal.size(); ++r)
        for (auto hi : h.element_indices()) {
            const std::int64_t x = g.add_indices(z.row_transversal[r], hi);
            z.row_of[x] = static_cast<std::int64_t>(r);
            z.h_part_of[x] = hi;
        }
    const auto d = g.dual();
    z.col_of.assign(d.order(), -1);
    for (std::size_t c = 0; c < z.col_transversal.size(); ++c)
        for (auto yi : hperp.element_indices())
            z.col_of[d.add_indices(z.col_transversal[c], yi)] = static_cast<std::int64_t>(c);

    const auto rows = static_cast<Eigen::Index>(z.row_transversal.size());
    const auto cols = static_cast<Eigen::Index>(z.col_transversal.size());
    z.data.resize(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            const GroupElement s = d.element_at(z.col_transversal[j]);
            std::complex<double> acc = 0.0;
            for (auto hi : h.element_indices())
                acc += f.values[g.add_indices(z.row_transversal[i], hi)] *
                       character_value(g, g.element_at(hi), s);
            z.data(i, j) = acc * z.chain.wH;
        }
    }
    return z;
}

std::complex<double> zak_eval(const ZakArray& z, const GroupElement& x, const GroupElement& xi) {
    const auto& g = z.group;
    const auto d = g.dual();
    const std::int64_t xidx = g.index_of(x);
    const std::int64_t col = z.col_of[d.index_of(xi)];
    const std::int64_t row = z.row_of[xidx];
    const std::int64_t hpart = z.h_part_of[xidx];
    // Z(t + h, s + gamma) = conj(s(h)) Z(t, s) for h in H, gamma in Hperp.
    const GroupElement s = d.element_at(z.col_transversal[col]);
    const std::complex<double> phase =
        std::conj(character_value(g, g.element_at(hpart), s));
    return phase * z.data(row, col);
}

Window inverse_zak(const ZakArray& z) {
    const auto& g = z.group;
    const auto& h = z.subgroupH;
    const auto rows = static_cast<std::int64_t>(z.row_transversal.size());
    const auto cols = static_cast<std::int64_t>(z.col_transversal.size());
    if (rows * cols != g.order() || z.data.rows() != rows || z.data.cols() != cols)
        throw std::invalid_argument("inverse_zak: inconsistent dimensions");
    const auto d = g.dual();
    // f(t + h) recovered by Fourier inversion on H: the stored columns,
    // restricted to H, enumerate the characters of H exactly once.
    Eigen::VectorXcd out(g.order());
    const double scale = z.chain.wGhatModHperp / z.chain.wH;
    for (std::int64_t r = 0; r < rows; ++r) {
        for (auto hi : h.element_indices()) {
            const std::int64_t x = g.add_indices(z.row_transversal[r], hi);
            std::complex<double> acc = 0.0;
            for (std::int64_t c = 0; c < cols; ++c) {
                const GroupElement s = d.element_at(z.col_transversal[c]);
                acc += z.data(r, c) * std::conj(character_value(g, g.element_at(hi), s));
            }
            out[x] = scale * acc;
        }
    }
    return Window{g, std::move(out)};
}

FiberMap fiberize(const Window& f, const Subgroup& h) {
    const auto& g = f.group;
    if (!(h.parent() == g)) throw std::invalid_argument("fiberize: subgroup of a different group");
    const Subgroup hperp = annihilator(g, h);
    const auto d = g.dual();
    FiberMap fm{g, h, hperp, transversal(d, hperp), {}};
    const Window fhat = fourier(f);
    fm.fibers.reserve(fm.omega.size());
    for (auto w : fm.omega) {
        Eigen::VectorXcd fiber(hperp.size());
        Eigen::Index k = 0;
        for (auto alpha : hperp.element_indices())
            fiber[k++] = fhat.values[d.add_indices(w, alpha)];
        fm.fibers.push_back(std::move(fiber));
    }
    return fm;
}

std::string window_to_json(const Window& f) {
    auto num = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.15g", v);
        return std::string(buf);
    };
    std::ostringstream os;
    os << "{\"group\": [";
    for (std::size_t j = 0; j < f.group.factors().size(); ++j)
        os << (j ? ", " : "") << f.group.factors()[j];
    os << "], \"values\": [";
    for (Eigen::Index i = 0; i < f.values.size(); ++i)
        os << (i ? ", " : "") << "[" << num(f.values[i].real()) << ", " << num(f.values[i].imag())
           << "]";
    os << "]}\n";
    return os.str();
}

Window window_from_json_text(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const auto factors = j.at("group").get<std::vector<std::int64_t>>();
    FiniteAbelianGroup g(factors);
    const auto& vals = j.at("values");
    if (static_cast<std::int64_t>(vals.size()) != g.order())
        throw std::invalid_argument("window file: value count does not match group order");
    Eigen::VectorXcd v(g.order());
    for (std::int64_t i = 0; i < g.order(); ++i) {
        const auto& pair = vals.at(i);
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("window file: each value must be [re, im]");
        v[i] = {pair.at(0).get<double>(), pair.at(1).get<double>()};
    }
    return make_window(g, std::move(v));
}

Window read_window_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open window file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return window_from_json_text(ss.str());
}

void write_window_json(const Window& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write window file: " + path);
    out << window_to_json(f);
}

}  // namespace zakgabor

#include "twr/ostbc.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <numbers>

#include "twr/error.hpp"

namespace twr {

OstbcCode OstbcCode::alamouti() {
    OstbcCode code;
    code.name = "alamouti";
    code.n_tx = 2;
    code.t_slots = 2;
    code.m_symbols = 2;
    Eigen::MatrixXd a1(2, 2), a2(2, 2), b1(2, 2), b2(2, 2);
    a1 << 1, 0, 0, 1;
    a2 << 0, -1, 1, 0;
    b1 << 1, 0, 0, -1;
    b2 << 0, 1, 1, 0;
    code.a = {a1, a2};
    code.b = {b1, b2};
    return code;
}

OstbcCode OstbcCode::by_name(const std::string& name) {
    if (name == "alamouti" || name == "g2") return alamouti();
    throw Unsupported("unknown OSTBC '" + name + "'");
}

CMat encode(const OstbcCode& code, std::span<const cplx> symbols, double symbol_energy) {
    if (static_cast<int>(symbols.size()) != code.m_symbols)
        throw DimensionMismatch("encode: expected " + std::to_string(code.m_symbols) + " symbols, got " +
                                std::to_string(symbols.size()));
    const double scale = std::sqrt(symbol_energy);
    CMat c = CMat::Zero(code.n_tx, code.t_slots);
    for (int n = 0; n < code.m_symbols; ++n) {
        const cplx s = scale * symbols[static_cast<std::size_t>(n)];
        c += s.real() * code.a[static_cast<std::size_t>(n)].cast<cplx>() +
             cplx(0.0, s.imag()) * code.b[static_cast<std::size_t>(n)].cast<cplx>();
    }
    return c;
}

namespace {

std::uint32_t gray(std::uint32_t i) { return i ^ (i >> 1); }

bool is_pow2(int m) { return m > 1 && std::has_single_bit(static_cast<unsigned>(m)); }

}  // namespace

Constellation::Constellation(Modulation m, std::vector<cplx> points, std::vector<std::uint32_t> labels)
    : modulation_(m),
      bits_(std::countr_zero(static_cast<unsigned>(points.size()))),
      points_(std::move(points)),
      labels_(std::move(labels)),
      by_label_(points_.size()) {
    for (std::size_t i = 0; i < labels_.size(); ++i) by_label_[labels_[i]] = static_cast<int>(i);
}

Constellation Constellation::psk(int order) {
    if (!is_pow2(order)) throw DomainError("PSK order must be a power of two >= 2");
    std::vector<cplx> pts;
    std::vector<std::uint32_t> labels;
    for (int k = 0; k < order; ++k) {
        pts.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / order));
        labels.push_back(gray(static_cast<std::uint32_t>(k)));
    }
    return {Modulation::psk, std::move(pts), std::move(labels)};
}

Constellation Constellation::qam(int order) {
    const int side = static_cast<int>(std::lround(std::sqrt(order)));
    if (!is_pow2(order) || side * side != order) throw DomainError("QAM order must be a square power of two");
    const int half_bits = std::countr_zero(static_cast<unsigned>(side));
    // Average energy of the +-1, +-3, ... grid is 2(M-1)/3.
    const double norm = 1.0 / std::sqrt(2.0 * (order - 1) / 3.0);
    std::vector<cplx> pts;
    std::vector<std::uint32_t> labels;
    for (int i = 0; i < side; ++i)
        for (int q = 0; q < side; ++q) {
            pts.emplace_back(norm * (2 * i - side + 1), norm * (2 * q - side + 1));
            labels.push_back((gray(static_cast<std::uint32_t>(i)) << half_bits) | gray(static_cast<std::uint32_t>(q)));
        }
    return {Modulation::qam, std::move(pts), std::move(labels)};
}

Constellation Constellation::by_name(const std::string& name) {
    if (name == "bpsk") return psk(2);
    if (name == "qpsk") return psk(4);
    if (name.size() > 3 && (name.ends_with("psk") || name.ends_with("qam"))) {
        int order = 0;
        const char* end = name.data() + name.size() - 3;
        const auto [ptr, ec] = std::from_chars(name.data(), end, order);
        if (ec == std::errc{} && ptr == end) return name.ends_with("psk") ? psk(order) : qam(order);
    }
    throw Unsupported("unknown constellation '" + name + "'");
}

int Constellation::demap(cplx y) const {
    int best = 0;
    double best_d = std::norm(y - points_[0]);
    for (std::size_t i = 1; i < points_.size(); ++i) {
        const double d = std::norm(y - points_[i]);
        if (d < best_d) {
            best_d = d;
            best = static_cast<int>(i);
        }
    }
    return best;
}

std::string Constellation::name() const {
    if (modulation_ == Modulation::psk) {
        if (order() == 2) return "bpsk";
        if (order() == 4) return "qpsk";
        return std::to_string(order()) + "psk";
    }
    return std::to_string(order()) + "qam";
}

std::vector<int> map_bits(const Constellation& c, std::span<const std::uint8_t> bits) {
    const auto k = static_cast<std::size_t>(c.bits_per_symbol());
    if (bits.size() % k != 0) throw DimensionMismatch("bit count is not a multiple of bits per symbol");
    std::vector<int> out;
    out.reserve(bits.size() / k);
    for (std::size_t s = 0; s < bits.size(); s += k) {
        std::uint32_t label = 0;
        for (std::size_t b = 0; b < k; ++b) label = (label << 1) | (bits[s + b] & 1u);
        out.push_back(c.index_of_label(label));
    }
    return out;
}

std::vector<std::uint8_t> symbol_bits(const Constellation& c, int index) {
    const int k = c.bits_per_symbol();
    const std::uint32_t label = c.label(index);
    std::vector<std::uint8_t> out(static_cast<std::size_t>(k));
    for (int b = 0; b < k; ++b) out[static_cast<std::size_t>(b)] = (label >> (k - 1 - b)) & 1u;
    return out;
}

}  // namespace twr

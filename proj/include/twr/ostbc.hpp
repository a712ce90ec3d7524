#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "twr/linalg.hpp"

namespace twr {

/// Linear orthogonal space-time block code described by its dispersion
/// matrices: C = sum_n Re(c_n) A_n + j Im(c_n) B_n, with A_n, B_n real
/// n_tx x t_slots.
struct OstbcCode {
    std::string name;
    int n_tx = 0;
    int t_slots = 0;
    int m_symbols = 0;
    std::vector<Eigen::MatrixXd> a;
    std::vector<Eigen::MatrixXd> b;

    double rate() const { return static_cast<double>(m_symbols) / t_slots; }

    /// G2 = [[c1, -c2*], [c2, c1*]].
    static OstbcCode alamouti();

    static OstbcCode by_name(const std::string& name);
};

/// Codeword for unit-energy `symbols` scaled so E|c_n|^2 = symbol_energy.
/// Throws DimensionMismatch if symbols.size() != code.m_symbols.
CMat encode(const OstbcCode& code, std::span<const cplx> symbols, double symbol_energy = 1.0);

enum class Modulation { psk, qam };

/// Unit average energy constellation with Gray bit labels.
class Constellation {
public:
    static Constellation psk(int order);
    static Constellation qam(int order);

    /// "bpsk", "qpsk", "8psk", "16psk", "4qam", "16qam", "64qam".
    static Constellation by_name(const std::string& name);

    Modulation modulation() const { return modulation_; }
    int order() const { return static_cast<int>(points_.size()); }
    int bits_per_symbol() const { return bits_; }
    const std::vector<cplx>& points() const { return points_; }
    cplx point(int index) const { return points_[static_cast<std::size_t>(index)]; }

    /// Gray label of symbol `index`.
    std::uint32_t label(int index) const { return labels_[static_cast<std::size_t>(index)]; }

    /// Symbol index carrying `label`.
    int index_of_label(std::uint32_t label) const { return by_label_[label]; }

    /// Nearest point; ties go to the lowest index.
    int demap(cplx y) const;

    std::string name() const;

private:
    Constellation(Modulation m, std::vector<cplx> points, std::vector<std::uint32_t> labels);

    Modulation modulation_;
    int bits_;
    std::vector<cplx> points_;
    std::vector<std::uint32_t> labels_;
    std::vector<int> by_label_;
};

/// Groups `bits` (MSB first, bits_per_symbol per symbol) into symbol indices.
std::vector<int> map_bits(const Constellation& c, std::span<const std::uint8_t> bits);

/// Inverse of map_bits for a single symbol, MSB first.
std::vector<std::uint8_t> symbol_bits(const Constellation& c, int index);

inline int demap_symbol(const Constellation& c, cplx point) { return c.demap(point); }

}  // namespace twr

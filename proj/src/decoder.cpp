#include "twr/decoder.hpp"

#include <cmath>
#include <limits>

#include "twr/error.hpp"

namespace twr {

namespace {

// W (Y - a G^_i C_i): the whitened observation with self-interference removed.
CMat cancelled_observation(const DecoderInput& in) {
    return in.csi.whitener * (in.y - in.a * in.csi.g_own_hat * in.own_codeword);
}

std::vector<cplx> scaled_symbols(const Constellation& cons, const std::vector<int>& idx, double energy) {
    const double s = std::sqrt(energy);
    std::vector<cplx> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(s * cons.point(i));
    return out;
}

}  // namespace

double codeword_metric(const DecoderInput& in, const OstbcCode& code, const Constellation& cons,
                       const std::vector<int>& symbols) {
    const auto syms = scaled_symbols(cons, symbols, 1.0);
    const CMat c = encode(code, syms, in.partner_energy);
    const CMat x = in.a * in.csi.whitener * in.csi.g_cross_hat;
    return (cancelled_observation(in) - x * c).squaredNorm();
}

Decision decode_exhaustive(const DecoderInput& in, const OstbcCode& code, const Constellation& cons) {
    const int m = cons.order();
    double candidates = std::pow(static_cast<double>(m), code.m_symbols);
    if (candidates > 65536.0)
        throw SearchSpaceTooLarge("exhaustive search over " + std::to_string(static_cast<long long>(candidates)) +
                                  " codewords exceeds 65536");

    const CMat y = cancelled_observation(in);
    const CMat x = in.a * in.csi.whitener * in.csi.g_cross_hat;
    const double scale = std::sqrt(in.partner_energy);

    std::vector<int> idx(static_cast<std::size_t>(code.m_symbols), 0);
    std::vector<cplx> syms(idx.size());
    Decision best{idx, std::numeric_limits<double>::infinity()};
    const auto total = static_cast<long long>(candidates);
    for (long long n = 0; n < total; ++n) {
        // Odometer with the first symbol most significant: lexicographic order.
        long long rem = n;
        for (int k = code.m_symbols - 1; k >= 0; --k) {
            idx[static_cast<std::size_t>(k)] = static_cast<int>(rem % m);
            rem /= m;
        }
        for (std::size_t k = 0; k < idx.size(); ++k) syms[k] = scale * cons.point(idx[k]);
        const double metric = (y - x * encode(code, syms)).squaredNorm();
        if (metric < best.metric) best = {idx, metric};
    }
    return best;
}

std::vector<cplx> symbolwise_statistics(const DecoderInput& in, const OstbcCode& code) {
    const CMat y = cancelled_observation(in);
    const CMat x = in.a * in.csi.whitener * in.csi.g_cross_hat;
    const double energy = x.squaredNorm();
    if (energy == 0.0) return std::vector<cplx>(static_cast<std::size_t>(code.m_symbols), cplx{});
    const CMat yx = y.adjoint() * x;
    std::vector<cplx> stats;
    stats.reserve(static_cast<std::size_t>(code.m_symbols));
    for (int n = 0; n < code.m_symbols; ++n) {
        const auto k = static_cast<std::size_t>(n);
        const cplx ta = (yx * code.a[k].cast<cplx>()).trace();
        const cplx tb = (yx * code.b[k].cast<cplx>()).trace();
        stats.emplace_back(ta.real() / energy, -tb.imag() / energy);
    }
    return stats;
}

Decision decode_symbolwise(const DecoderInput& in, const OstbcCode& code, const Constellation& cons) {
    const auto stats = symbolwise_statistics(in, code);
    const double scale = std::sqrt(in.partner_energy);
    Decision d;
    d.symbols.reserve(stats.size());
    for (const cplx z : stats) d.symbols.push_back(cons.demap(z / scale));
    d.metric = codeword_metric(in, code, cons, d.symbols);
    return d;
}

}  // namespace twr

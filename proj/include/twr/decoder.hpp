#pragma once

#include <vector>

#include "twr/estimation.hpp"
#include "twr/ostbc.hpp"

namespace twr {

/// Everything User-i may use to decode User-j's codeword. The true channel
/// is deliberately absent.
struct DecoderInput {
    CMat y;                   ///< N_i x T received block
    CsiEstimates csi;         ///< estimated (or exact) CSI
    CMat own_codeword;        ///< C_i, known to the receiver
    double a = 1.0;           ///< relay gain
    double partner_energy = 1.0;  ///< E|c_n|^2 of the partner's symbols
};

struct Decision {
    std::vector<int> symbols;  ///< constellation indices, one per code symbol
    double metric = 0.0;       ///< whitened residual norm^2 of the decision
};

/// Whitened residual || W (Y - a G^_i C_i - a G^_ij C_j) ||_F^2 for the
/// candidate codeword built from `symbols`.
double codeword_metric(const DecoderInput& in, const OstbcCode& code, const Constellation& cons,
                       const std::vector<int>& symbols);

/// Exhaustive ML search over all M^{M_j} codewords. Ties resolve to the
/// lexicographically smallest index tuple. SearchSpaceTooLarge above 65536
/// candidates.
Decision decode_exhaustive(const DecoderInput& in, const OstbcCode& code, const Constellation& cons);

/// Per-symbol decisions from the linear OSTBC statistic
///   (Re Tr{Y'^H X A_n} - j Im Tr{Y'^H X B_n}) / ||X||^2
/// with X = a W G^_ij and Y' = W (Y - a G^_i C_i).
Decision decode_symbolwise(const DecoderInput& in, const OstbcCode& code, const Constellation& cons);

/// The decision statistics themselves (before slicing), one per symbol.
std::vector<cplx> symbolwise_statistics(const DecoderInput& in, const OstbcCode& code);

}  // namespace twr

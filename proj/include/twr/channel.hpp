#pragma once

#include "twr/linalg.hpp"
#include "twr/rng.hpp"

namespace twr {

/// One block-static draw of the two relay-user channels. h1 is N1 x Nr and
/// h2 is N2 x Nr; reciprocity means the uplink uses the transposes.
struct ChannelRealization {
    CMat h1;
    CMat h2;

    const CMat& h(int user) const { return user == 1 ? h1 : h2; }

    /// G_i = H_i H_i^T.
    CMat g_own(int user) const { return h(user) * h(user).transpose(); }

    /// G_ij = H_i H_j^T with j the other user.
    CMat g_cross(int user) const { return h(user) * h(3 - user).transpose(); }
};

/// rows x cols matrix of i.i.d. CN(0, 1) entries.
CMat sample_awgn(Eigen::Index rows, Eigen::Index cols, RngStream& rng);

/// i.i.d. Rayleigh channels for antenna counts (n1, n2, nr).
ChannelRealization sample_channel(int n1, int n2, int nr, RngStream& rng);

}  // namespace twr

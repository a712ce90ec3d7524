#include "twr/channel.hpp"

#include "twr/error.hpp"

namespace twr {

CMat sample_awgn(Eigen::Index rows, Eigen::Index cols, RngStream& rng) {
    CMat out(rows, cols);
    // Column-major fill so vec(out) is the draw order.
    for (Eigen::Index c = 0; c < cols; ++c)
        for (Eigen::Index r = 0; r < rows; ++r) out(r, c) = rng.complex_normal();
    return out;
}

ChannelRealization sample_channel(int n1, int n2, int nr, RngStream& rng) {
    if (n1 < 1 || n2 < 1 || nr < 1) throw DomainError("antenna counts must be >= 1");
    ChannelRealization ch;
    ch.h1 = sample_awgn(n1, nr, rng);
    ch.h2 = sample_awgn(n2, nr, rng);
    return ch;
}

}  // namespace twr

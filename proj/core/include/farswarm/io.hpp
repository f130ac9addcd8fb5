#ifndef FARSWARM_IO_HPP
#define FARSWARM_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "farswarm/ensemble.hpp"
#include "farswarm/state.hpp"

namespace farswarm {

// shortest exact decimal (round-trips bit-exactly)
std::string format_double(double v);
// fixed 17-significant-digit form used for NDJSON positions
std::string format_double_17(double v);

struct Frame {
    std::int64_t t = 0;
    int dim = 2;
    std::vector<Vec> positions;
};

// Streaming NDJSON writer: one {"t": ..., "positions": [[..], ..]} line per
// recorded step. Records t = 0, stride, 2*stride, ...; finish() always writes
// the final state so the end of the run is never lost.
class FrameWriter {
public:
    FrameWriter(std::ostream& out, std::int64_t stride);
    void observe(const SwarmState& state);
    void finish(const SwarmState& state);

private:
    std::ostream& out_;
    std::int64_t stride_;
    std::int64_t last_written_ = -1;
};

std::vector<Frame> read_frames(std::istream& in);

SwarmState frame_to_state(const Frame& frame, double step_size, Rule rule, std::uint64_t seed);

// Per-step statistics CSV (columns t,n_a,extent,assembled) with the same
// stride/final semantics as FrameWriter.
class StatsWriter {
public:
    StatsWriter(std::ostream& out, std::int64_t stride);
    void observe(const SwarmState& state);
    void finish(const SwarmState& state);

private:
    void write_row(const SwarmState& state);

    std::ostream& out_;
    std::int64_t stride_;
    std::int64_t last_written_ = -1;
};

void write_ensemble_series_csv(std::ostream& out, const EnsembleResult& result);
void write_ensemble_summary_csv(std::ostream& out, const EnsembleResult& result);

}  // namespace farswarm

#endif

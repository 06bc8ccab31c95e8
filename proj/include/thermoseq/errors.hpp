#pragma once

#include <stdexcept>
#include <string>

namespace thermoseq {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File could not be opened, read or written.
struct io_error : error {
    using error::error;
};

/// Byte-level container damage (bad magic, truncation, ...).
struct format_error : error {
    using error::error;
};

/// Inputs violate a documented precondition or invariant.
struct validation_error : error {
    using error::error;
};

/// A quantity required to be nonzero collapsed (e.g. reference stddev of 0).
struct degenerate_error : error {
    using error::error;
};

enum class TseqFault {
    bad_magic,
    bad_version,
    zero_dimension,
    bad_header,
    truncated,
    trailing_bytes,
    nonfinite_sample,
};

struct tseq_error : format_error {
    TseqFault fault;
    tseq_error(TseqFault f, const std::string& msg) : format_error(msg), fault(f) {}
};

}  // namespace thermoseq

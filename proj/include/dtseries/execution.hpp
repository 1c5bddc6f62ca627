#pragma once

namespace dtseries {

/// Selects the reference (serial) or OpenMP implementation of a kernel.
/// Both produce identical results; the serial path is kept for testing.
enum class Execution { serial, parallel };

}  // namespace dtseries

#pragma once

#include <cmath>

namespace semnet {

// dB/dBm values are accepted at config ingestion only; everything past that
// point is carried in SI units (W, Hz, s, J).

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

inline double ghz_to_hz(double ghz) { return ghz * 1e9; }
inline double mhz_to_hz(double mhz) { return mhz * 1e6; }

}  // namespace semnet

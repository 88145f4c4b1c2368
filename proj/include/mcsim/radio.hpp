#pragma once

#include <string>

namespace mcsim::radio {

/// Air-interface parameters of one element. antenna_gain_db applies in both
/// transmit and receive roles. Link-down threshold is
/// sensitivity_dbm - hysteresis_db; link-up threshold is sensitivity_dbm.
struct RadioParams {
    double tx_power_dbm = 30.0;
    double antenna_gain_db = 0.0;
    double bandwidth_hz = 100e6;
    double noise_figure_db = 7.0;
    std::string carrier_band_label = "n78";
    double sensitivity_dbm = -100.0;
    double hysteresis_db = 3.0;
};

/// Log-distance path loss: PL(d) = pl0_db + 10 * exponent_n * log10(d / d0_m),
/// clamped to pl0_db for d <= d0_m.
struct PathLossModel {
    double pl0_db = 60.0;
    double d0_m = 1.0;
    double exponent_n = 2.5;
};

enum class LinkState { Down, Up };

double path_loss_db(double d_m, const PathLossModel& model);

double rx_power_dbm(const RadioParams& tx, const RadioParams& rx, double pl_db);

/// Thermal noise floor: -174 dBm/Hz + 10*log10(bandwidth_hz) + noise_figure_db.
double noise_floor_dbm(const RadioParams& rx);

double snr_db(double rx_dbm, const RadioParams& rx);

/// Shannon capacity B*log2(1 + snr), capped at B * max_spectral_efficiency.
double capacity_bps(double bandwidth_hz, double snr_db, double max_spectral_efficiency = 7.4);

/// Hysteresis state machine: Down->Up at rx >= sensitivity, Up->Down at
/// rx < sensitivity - hysteresis, unchanged inside the band.
LinkState link_state(double rx_dbm, LinkState prev, const RadioParams& params);

}  // namespace mcsim::radio

#include "mcsim/radio.hpp"

#include <algorithm>
#include <cmath>

namespace mcsim::radio {

double path_loss_db(double d_m, const PathLossModel& model) {
    const double d = std::max(d_m, model.d0_m);
    return model.pl0_db + 10.0 * model.exponent_n * std::log10(d / model.d0_m);
}

double rx_power_dbm(const RadioParams& tx, const RadioParams& rx, double pl_db) {
    return tx.tx_power_dbm + tx.antenna_gain_db + rx.antenna_gain_db - pl_db;
}

double noise_floor_dbm(const RadioParams& rx) {
    return -174.0 + 10.0 * std::log10(rx.bandwidth_hz) + rx.noise_figure_db;
}

double snr_db(double rx_dbm, const RadioParams& rx) {
    return rx_dbm - noise_floor_dbm(rx);
}

double capacity_bps(double bandwidth_hz, double snr_db, double max_spectral_efficiency) {
    const double snr_linear = std::pow(10.0, snr_db / 10.0);
    const double se = std::log2(1.0 + snr_linear);
    return bandwidth_hz * std::min(se, max_spectral_efficiency);
}

LinkState link_state(double rx_dbm, LinkState prev, const RadioParams& params) {
    if (prev == LinkState::Down) {
        return rx_dbm >= params.sensitivity_dbm ? LinkState::Up : LinkState::Down;
    }
    return rx_dbm < params.sensitivity_dbm - params.hysteresis_db ? LinkState::Down
                                                                  : LinkState::Up;
}

}  // namespace mcsim::radio

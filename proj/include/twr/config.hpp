#pragma once

#include <optional>

#include "twr/ostbc.hpp"

namespace twr {

/// How users scale their training pilots in the cascaded-estimation phases.
enum class PilotPower {
    matched,  ///< each pilot column carries the data column energy gamma_bar_i
    unit,     ///< unit-norm pilot columns
};

/// Scenario parameters of the two-way relay link. SNRs are linear.
struct SystemConfig {
    int n1 = 2;
    int n2 = 2;
    int nr = 2;
    int mp = 1;   ///< relay pilot repetitions, P = mp * nr
    int np1 = 1;  ///< User-1 pilot repetitions, L = np1 * n1
    int np2 = 1;
    double gamma_bar_1 = 1.0;
    double gamma_bar_2 = 1.0;
    std::optional<double> fixed_gain = 1.0;  ///< a; when empty, derived from relay_power
    double relay_power = 0.0;                ///< b
    PilotPower pilot_power = PilotPower::matched;
    OstbcCode code = OstbcCode::alamouti();
    Constellation constellation = Constellation::psk(2);

    int n(int user) const { return user == 1 ? n1 : n2; }
    int np(int user) const { return user == 1 ? np1 : np2; }
    double gamma_bar(int user) const { return user == 1 ? gamma_bar_1 : gamma_bar_2; }
    int t_slots() const { return code.t_slots; }

    /// E|c_n|^2 for `user`'s data symbols, gamma_bar / N so that each codeword
    /// column has mean energy gamma_bar.
    double symbol_energy(int user) const { return gamma_bar(user) / n(user); }

    /// Throws DomainError on inconsistent values.
    void validate() const;
};

inline int other_user(int user) { return 3 - user; }

}  // namespace twr

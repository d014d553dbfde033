#include "molgate/protocols.hpp"

#include <cmath>
#include <sstream>

#include "molgate/errors.hpp"
#include "molgate/rates.hpp"

namespace molgate {

Scheme scheme_from_string(const std::string& s) {
    if (s == "direct") return Scheme::Direct;
    if (s == "inverted") return Scheme::Inverted;
    if (s == "rotational") return Scheme::Rotational;
    if (s == "blockade") return Scheme::Blockade;
    throw ConfigError("unknown scheme '" + s + "'");
}

std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::Direct: return "direct";
        case Scheme::Inverted: return "inverted";
        case Scheme::Rotational: return "rotational";
        case Scheme::Blockade: return "blockade";
    }
    return "?";
}

namespace {

constexpr const char* kGround0 = "0";
constexpr const char* kGround1 = "1";
constexpr const char* kExcited = "e";

void require_qubit_levels(const MoleculeSpec& m) {
    for (const char* lb : {kGround0, kGround1, kExcited}) {
        if (!m.find_level(lb))
            throw PhysicsError("molecule '" + m.name + "' lacks level '" + std::string(lb) + "'");
    }
}

void require_zero_dipole_ground(const MoleculeSpec& m) {
    for (const char* lb : {kGround0, kGround1}) {
        if (m.find_level(lb)->dipole_expectation_debye != 0.0)
            throw PhysicsError("molecule '" + m.name + "': ground level '" + std::string(lb) +
                               "' must carry zero dipole for this scheme");
    }
}

double finite_pulse_duration(const SchemeParams& p, double area) {
    if (!(p.pulse_rabi_rad_s > 0.0))
        throw ConfigError("finite pulses need pulse_rabi > 0");
    return area / p.pulse_rabi_rad_s;
}

// pi pulses on both molecules: excitation with phase 0, de-excitation
// with phase pi, so each 1 -> e -> 1 round trip closes with factor +1.
void add_pi_pair(Schedule& sched, const SchemeParams& p, double t_excite, double t_deexcite) {
    const double area = M_PI * p.pulse_area_scale;
    if (p.instantaneous_pulses) {
        for (Target m : {Target::MoleculeA, Target::MoleculeB}) {
            sched.rotations.push_back({m, kGround1, kExcited, area, 0.0, t_excite});
            sched.rotations.push_back({m, kGround1, kExcited, area, M_PI, t_deexcite});
        }
    } else {
        const double dur = finite_pulse_duration(p, area);
        for (Target m : {Target::MoleculeA, Target::MoleculeB}) {
            sched.pulses.push_back({m, kGround1, kExcited, p.pulse_rabi_rad_s, 0.0, 0.0,
                                    t_excite, dur});
            sched.pulses.push_back({m, kGround1, kExcited, p.pulse_rabi_rad_s, 0.0, M_PI,
                                    t_deexcite, dur});
        }
    }
}

BuiltScheme build_direct_like(const SchemeParams& p, const System& sys, Scheme scheme) {
    require_qubit_levels(sys.molecule_a);
    require_qubit_levels(sys.molecule_b);
    require_zero_dipole_ground(sys.molecule_a);
    require_zero_dipole_ground(sys.molecule_b);
    const double de_a = sys.molecule_a.find_level(kExcited)->dipole_expectation_debye;
    const double de_b = sys.molecule_b.find_level(kExcited)->dipole_expectation_debye;
    const double rate = dipole_dipole_rate(de_a, de_b, sys.geometry);
    const double tau = pi_phase_time(rate, p.rho_e_target);

    BuiltScheme out;
    out.system = sys;
    out.interaction_rate_rad_s = rate;
    out.hold_time_s = tau;
    Schedule& sched = out.schedule;
    const double pulse_dur =
        p.instantaneous_pulses ? 0.0 : finite_pulse_duration(p, M_PI * p.pulse_area_scale);
    add_pi_pair(sched, p, 0.0, pulse_dur + tau);
    sched.total_time_s = 2.0 * pulse_dur + tau;
    sched.validate();
    (void)scheme;
    return out;
}

}  // namespace

BuiltScheme build_direct(const SchemeParams& p) {
    return build_direct_like(p, p.system, Scheme::Direct);
}

BuiltScheme build_rotational(const SchemeParams& p) {
    System sys = p.system;
    for (MoleculeSpec* m : {&sys.molecule_a, &sys.molecule_b}) {
        for (const char* lb : {kGround0, kGround1, "e1", "e2"}) {
            if (!m->find_level(lb))
                throw PhysicsError("molecule '" + m->name + "' lacks level '" + std::string(lb) +
                                   "' required by the rotational scheme");
        }
        // Selection-rule restrictions on the |e> = |e1>+|e2> construction.
        if (!m->has_multiphoton_coupling(kGround1, kExcited))
            throw RestrictionViolation(
                "molecule '" + m->name +
                "': clause 1 - 1<->e must be declared as a multi-photon coupling");
        if (m->has_multiphoton_coupling(kGround0, kExcited))
            throw RestrictionViolation(
                "molecule '" + m->name +
                "': clause 1 - the 1<->e photon combination must not couple 0");
        const double d_trans = m->transition_dipole("e1", "e2");
        if (!(d_trans > 0.0))
            throw RestrictionViolation(
                "molecule '" + m->name +
                "': clause 2 - e1<->e2 needs a nonzero electric dipole transition");
        for (const char* eh : {"e1", "e2"}) {
            for (const char* g : {kGround0, kGround1}) {
                if (m->has_transition_dipole(eh, g))
                    throw RestrictionViolation("molecule '" + m->name + "': clause 3 - " +
                                               std::string(eh) + "<->" + g +
                                               " transition dipole is forbidden");
            }
        }
        // Rewrite to the effective three-level molecule: |e> carries the
        // e1<->e2 transition dipole (secular rotating-dipole picture).
        const LevelSpec& e1 = *m->find_level("e1");
        const LevelSpec& e2 = *m->find_level("e2");
        MoleculeSpec eff = *m;
        eff.levels = {*m->find_level(kGround0), *m->find_level(kGround1),
                      {kExcited, d_trans, std::min(e1.lifetime_s, e2.lifetime_s), std::nullopt}};
        eff.transition_dipoles_debye.clear();
        *m = eff;
    }
    BuiltScheme out = build_direct_like(p, sys, Scheme::Rotational);
    return out;
}

BuiltScheme build_inverted(const SchemeParams& p) {
    const System& sys = p.system;
    require_qubit_levels(sys.molecule_a);
    require_qubit_levels(sys.molecule_b);
    if (!(p.dc_field_V_per_m > 0.0))
        throw ZeroRate("inverted scheme: dc_field = 0 induces no ground-state dipole");
    double d_g[2];
    int i = 0;
    for (const MoleculeSpec* m : {&sys.molecule_a, &sys.molecule_b}) {
        if (!(m->permanent_dipole_debye > 0.0) || !m->rotational_constant_B_J)
            throw PhysicsError("molecule '" + m->name +
                               "': inverted scheme needs permanent dipole and rotational constant");
        d_g[i++] = stark_mixed_dipole(m->permanent_dipole_debye, *m->rotational_constant_B_J,
                                      p.dc_field_V_per_m);
    }
    const double rate = dipole_dipole_rate(d_g[0], d_g[1], sys.geometry);
    const double tau = pi_phase_time(rate, 1.0);

    BuiltScheme out;
    out.system = sys;
    out.interaction_rate_rad_s = rate;
    out.hold_time_s = tau;
    Schedule& sched = out.schedule;
    const double pulse_dur =
        p.instantaneous_pulses ? 0.0 : finite_pulse_duration(p, M_PI * p.pulse_area_scale);
    add_pi_pair(sched, p, 0.0, pulse_dur + tau);
    sched.dc_intervals.push_back({p.dc_field_V_per_m, pulse_dur, tau});
    sched.total_time_s = 2.0 * pulse_dur + tau;
    // Configured single-molecule DC phase step closing the published
    // table: pi/2 per molecule on the ground manifold, i.e. a net -1 on
    // every all-ground product state.
    for (Target m : {Target::MoleculeA, Target::MoleculeB}) {
        sched.phase_kicks.push_back(
            {m, {{kGround0, M_PI / 2.0}, {kGround1, M_PI / 2.0}}, sched.total_time_s});
    }
    sched.validate();
    return out;
}

BuiltScheme build_blockade(const SchemeParams& p) {
    const System& sys = p.system;
    require_qubit_levels(sys.molecule_a);
    require_qubit_levels(sys.molecule_b);
    if (p.instantaneous_pulses)
        throw ConfigError("blockade scheme needs finite pulses (set pulse_rabi)");
    const double de_a = sys.molecule_a.find_level(kExcited)->dipole_expectation_debye;
    const double de_b = sys.molecule_b.find_level(kExcited)->dipole_expectation_debye;
    const double rate = dipole_dipole_rate(de_a, de_b, sys.geometry);

    BuiltScheme out;
    out.system = sys;
    out.interaction_rate_rad_s = rate;
    out.hold_time_s = 0.0;
    const double t_pi = finite_pulse_duration(p, M_PI * p.pulse_area_scale);
    const double t_2pi = 2.0 * t_pi;
    Schedule& sched = out.schedule;
    sched.pulses.push_back({Target::MoleculeA, kGround1, kExcited, p.pulse_rabi_rad_s, 0.0, 0.0,
                            0.0, t_pi});
    sched.pulses.push_back({Target::MoleculeB, kGround1, kExcited, p.pulse_rabi_rad_s, 0.0, 0.0,
                            t_pi, t_2pi});
    sched.pulses.push_back({Target::MoleculeA, kGround1, kExcited, p.pulse_rabi_rad_s, 0.0, 0.0,
                            t_pi + t_2pi, t_pi});
    sched.total_time_s = 2.0 * t_pi + t_2pi;
    sched.validate();

    const double ratio = std::abs(rate) / p.pulse_rabi_rad_s;
    if (ratio < 10.0) {
        std::ostringstream os;
        os << "BlockadeRegimeWarning: V/Omega = " << ratio << " < 10; blockade is leaky";
        out.warnings.push_back(os.str());
    }
    return out;
}

BuiltScheme build_scheme(const SchemeParams& p) {
    switch (p.scheme) {
        case Scheme::Direct: return build_direct(p);
        case Scheme::Inverted: return build_inverted(p);
        case Scheme::Rotational: return build_rotational(p);
        case Scheme::Blockade: return build_blockade(p);
    }
    throw ConfigError("unreachable scheme");
}

}  // namespace molgate

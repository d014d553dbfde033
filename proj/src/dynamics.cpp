#include "molgate/dynamics.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

#include "molgate/errors.hpp"
#include "molgate/rates.hpp"

namespace molgate {

namespace {

double active_dc_field(const Schedule& schedule, double t) {
    double field = 0.0;  // overlapping intervals add
    for (const auto& dc : schedule.dc_intervals) {
        if (t >= dc.t_start_s && t < dc.t_end_s()) field += dc.field_V_per_m;
    }
    return field;
}

// Effective space-fixed dipole of a level at DC field E: the intrinsic
// expectation plus the Stark-induced dipole of an N=0 rotational level.
double effective_dipole(const LevelSpec& lv, const MoleculeSpec& mol, double E) {
    double d = lv.dipole_expectation_debye;
    if (E > 0.0 && lv.rotational_N && *lv.rotational_N == 0 &&
        mol.permanent_dipole_debye > 0.0 && mol.rotational_constant_B_J) {
        d += stark_mixed_dipole(mol.permanent_dipole_debye, *mol.rotational_constant_B_J, E);
    }
    return d;
}

void add_pulse_terms(Matrix& h, const PulseSpec& p, const System& sys, const LevelBasis& basis) {
    const bool on_a = p.molecule == Target::MoleculeA;
    const MoleculeSpec& mol = on_a ? sys.molecule_a : sys.molecule_b;
    mol.level_index(p.from_label);  // label check
    const int from = on_a ? basis.index_a(p.from_label) : basis.index_b(p.from_label);
    const int to = on_a ? basis.index_a(p.to_label) : basis.index_b(p.to_label);
    const Complex coupling = 0.5 * p.rabi_rad_s * std::exp(Complex(0.0, p.phase_rad));
    const int n_other = on_a ? basis.dim_b() : basis.dim_a();
    for (int k = 0; k < n_other; ++k) {
        const int i_to = on_a ? basis.flat_index(to, k) : basis.flat_index(k, to);
        const int i_from = on_a ? basis.flat_index(from, k) : basis.flat_index(k, from);
        h(i_to, i_to) += -p.detuning_rad_s;
        h(i_to, i_from) += coupling;
        h(i_from, i_to) += std::conj(coupling);
    }
}

}  // namespace

HermitianOperator segment_hamiltonian(const Schedule& schedule, double t, const System& sys,
                                      std::shared_ptr<const LevelBasis> basis,
                                      bool include_decay) {
    if (t < 0.0 || t > schedule.total_time_s)
        throw InvalidTime("segment_hamiltonian: t outside schedule");
    const int dim = basis->dim();
    HermitianOperator op;
    op.basis = basis;
    op.hermitian = Matrix::Zero(dim, dim);

    for (const auto& p : schedule.pulses) {
        if (t >= p.t_start_s && t < p.t_end_s()) add_pulse_terms(op.hermitian, p, sys, *basis);
    }

    const double dc = active_dc_field(schedule, t);
    for (int a = 0; a < basis->dim_a(); ++a) {
        const double da = effective_dipole(sys.molecule_a.levels[a], sys.molecule_a, dc);
        if (da == 0.0) continue;
        for (int b = 0; b < basis->dim_b(); ++b) {
            const double db = effective_dipole(sys.molecule_b.levels[b], sys.molecule_b, dc);
            if (db == 0.0) continue;
            const int k = basis->flat_index(a, b);
            op.hermitian(k, k) += dipole_dipole_rate(da, db, sys.geometry);
        }
    }

    if (include_decay) {
        op.decay_rates = Eigen::VectorXd::Zero(dim);
        for (int a = 0; a < basis->dim_a(); ++a) {
            for (int b = 0; b < basis->dim_b(); ++b) {
                double gamma = 0.0;
                const double la = sys.molecule_a.levels[a].lifetime_s;
                const double lb = sys.molecule_b.levels[b].lifetime_s;
                if (std::isfinite(la)) gamma += 1.0 / la;
                if (std::isfinite(lb)) gamma += 1.0 / lb;
                op.decay_rates(basis->flat_index(a, b)) = gamma;
            }
        }
    }
    return op;
}

namespace {

// Exact evolution over a constant segment. Keeps the eigendecomposition
// (Hermitian case) so intermediate sample times are cheap.
class SegmentPropagator {
public:
    SegmentPropagator(const HermitianOperator& op, const Vector& psi0)
        : psi0_(psi0), decay_(op.has_decay()) {
        if (decay_) {
            generator_ = op.hermitian;
            generator_ -= Complex(0.0, 0.5) *
                          Matrix(op.decay_rates.cast<Complex>().asDiagonal());
        } else {
            Eigen::SelfAdjointEigenSolver<Matrix> es(op.hermitian);
            eigvals_ = es.eigenvalues();
            eigvecs_ = es.eigenvectors();
            coeffs_ = eigvecs_.adjoint() * psi0_;
        }
    }

    Vector at(double dt) const {
        if (decay_) {
            Matrix u = (Complex(0.0, -dt) * generator_).exp();
            return u * psi0_;
        }
        Vector phased(coeffs_.size());
        for (Eigen::Index k = 0; k < coeffs_.size(); ++k) {
            phased(k) = coeffs_(k) * std::exp(Complex(0.0, -eigvals_(k) * dt));
        }
        return eigvecs_ * phased;
    }

private:
    Vector psi0_;
    bool decay_;
    Matrix generator_;
    Eigen::VectorXd eigvals_;
    Matrix eigvecs_;
    Vector coeffs_;
};

void apply_rotation(Vector& psi, const RotationImpulse& r, const LevelBasis& basis) {
    const bool on_a = r.molecule == Target::MoleculeA;
    const int from = on_a ? basis.index_a(r.from_label) : basis.index_b(r.from_label);
    const int to = on_a ? basis.index_a(r.to_label) : basis.index_b(r.to_label);
    const double c = std::cos(0.5 * r.area_rad);
    const Complex s = Complex(0.0, -std::sin(0.5 * r.area_rad));
    const Complex u_tf = s * std::exp(Complex(0.0, r.phase_rad));
    const Complex u_ft = s * std::exp(Complex(0.0, -r.phase_rad));
    const int n_other = on_a ? basis.dim_b() : basis.dim_a();
    for (int k = 0; k < n_other; ++k) {
        const int i_to = on_a ? basis.flat_index(to, k) : basis.flat_index(k, to);
        const int i_from = on_a ? basis.flat_index(from, k) : basis.flat_index(k, from);
        const Complex a_from = psi(i_from);
        const Complex a_to = psi(i_to);
        psi(i_from) = c * a_from + u_ft * a_to;
        psi(i_to) = u_tf * a_from + c * a_to;
    }
}

void apply_phase_kick(Vector& psi, const PhaseImpulse& kick, const LevelBasis& basis) {
    const bool on_a = kick.molecule == Target::MoleculeA;
    for (const auto& [label, phase] : kick.level_phases_rad) {
        const int idx = on_a ? basis.index_a(label) : basis.index_b(label);
        const Complex factor = std::exp(Complex(0.0, phase));
        const int n_other = on_a ? basis.dim_b() : basis.dim_a();
        for (int k = 0; k < n_other; ++k) {
            const int i = on_a ? basis.flat_index(idx, k) : basis.flat_index(k, idx);
            psi(i) *= factor;
        }
    }
}

}  // namespace

PropagationResult propagate(const RegisterState& initial, const Schedule& schedule,
                            const System& sys, const PropagationOptions& opts) {
    if (!(opts.tolerance > 0.0 && opts.tolerance <= 1e-6))
        throw ConfigError("propagation tolerance must lie in (0, 1e-6]");
    const auto basis = initial.basis;
    const std::vector<double> bounds = schedule.boundaries();
    const double total = schedule.total_time_s;
    const double t_tol = 1e-12 * total;

    std::vector<double> sample_times;
    if (opts.trajectory_samples > 0) {
        for (int k = 0; k <= opts.trajectory_samples; ++k) {
            sample_times.push_back(total * static_cast<double>(k) /
                                   static_cast<double>(opts.trajectory_samples));
        }
    }

    PropagationResult result;
    Vector psi = initial.amplitudes;
    std::size_t next_sample = 0;

    auto apply_impulses_at = [&](double t) {
        for (const auto& r : schedule.rotations) {
            if (std::abs(r.t_s - t) <= t_tol) apply_rotation(psi, r, *basis);
        }
        for (const auto& k : schedule.phase_kicks) {
            if (std::abs(k.t_s - t) <= t_tol) apply_phase_kick(psi, k, *basis);
        }
    };
    auto record_sample = [&](double t, const Vector& v) {
        TrajectorySample s;
        s.t_s = t;
        s.state.basis = basis;
        s.state.amplitudes = v;
        result.trajectory.push_back(std::move(s));
    };

    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        const double t0 = bounds[i];
        const double t1 = bounds[i + 1];
        apply_impulses_at(t0);
        while (next_sample < sample_times.size() && sample_times[next_sample] <= t0 + t_tol) {
            record_sample(sample_times[next_sample], psi);
            ++next_sample;
        }
        const HermitianOperator h = segment_hamiltonian(schedule, 0.5 * (t0 + t1), sys, basis,
                                                        opts.include_decay);
        SegmentPropagator prop(h, psi);
        while (next_sample < sample_times.size() && sample_times[next_sample] < t1 - t_tol) {
            record_sample(sample_times[next_sample], prop.at(sample_times[next_sample] - t0));
            ++next_sample;
        }
        psi = prop.at(t1 - t0);
    }
    apply_impulses_at(total);
    while (next_sample < sample_times.size()) {
        record_sample(sample_times[next_sample], psi);
        ++next_sample;
    }

    if (!psi.allFinite()) throw NonFiniteAmplitude("propagate: non-finite amplitudes");
    result.final_state.basis = basis;
    result.final_state.amplitudes = std::move(psi);
    return result;
}

double eq1_phase(const std::vector<double>& times, const std::vector<double>& weights,
                 double rate_rad_s) {
    if (times.empty() || weights.empty()) throw EmptyTrajectory("eq1_phase: empty trajectory");
    if (times.size() != weights.size())
        throw ConfigError("eq1_phase: times/weights size mismatch");
    double integral = 0.0;
    for (std::size_t i = 0; i + 1 < times.size(); ++i) {
        const double dt = times[i + 1] - times[i];
        if (dt <= 0.0) throw ConfigError("eq1_phase: times must increase");
        integral += 0.5 * (weights[i] + weights[i + 1]) * dt;
    }
    return rate_rad_s * integral;
}

double eq1_phase_from_trajectory(const std::vector<TrajectorySample>& trajectory,
                                 const std::string& excited_label, double rate_rad_s,
                                 bool product_convention) {
    if (trajectory.empty()) throw EmptyTrajectory("eq1_phase_from_trajectory: empty trajectory");
    std::vector<double> times, weights;
    times.reserve(trajectory.size());
    weights.reserve(trajectory.size());
    for (const auto& s : trajectory) {
        const double pa = level_population_a(s.state, excited_label);
        const double w = product_convention ? pa * level_population_b(s.state, excited_label)
                                            : pa * pa;
        times.push_back(s.t_s);
        weights.push_back(w);
    }
    return eq1_phase(times, weights, rate_rad_s);
}

}  // namespace molgate

#ifndef MOLGATE_STATE_HPP
#define MOLGATE_STATE_HPP

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "molgate/molecule.hpp"

namespace molgate {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Product basis over two molecules' level lists. Molecule A is the slow
// index: flat = a * nB + b. Ordering follows the MoleculeSpec declaration
// order (documented for bit-exact CSV output).
class LevelBasis {
public:
    LevelBasis(std::vector<std::string> labels_a, std::vector<std::string> labels_b);
    static LevelBasis from_system(const System& sys);

    int dim() const { return static_cast<int>(labels_a_.size() * labels_b_.size()); }
    int dim_a() const { return static_cast<int>(labels_a_.size()); }
    int dim_b() const { return static_cast<int>(labels_b_.size()); }

    int flat_index(int a, int b) const { return a * dim_b() + b; }
    std::pair<int, int> unflatten(int flat) const { return {flat / dim_b(), flat % dim_b()}; }

    int index_a(const std::string& label) const;  // throws UnknownLabel
    int index_b(const std::string& label) const;
    const std::string& label_a(int i) const { return labels_a_[i]; }
    const std::string& label_b(int i) const { return labels_b_[i]; }

    bool operator==(const LevelBasis& other) const {
        return labels_a_ == other.labels_a_ && labels_b_ == other.labels_b_;
    }

private:
    std::vector<std::string> labels_a_;
    std::vector<std::string> labels_b_;
};

struct RegisterState {
    Vector amplitudes;
    std::shared_ptr<const LevelBasis> basis;

    double norm2() const { return amplitudes.squaredNorm(); }
};

// Unit vector on the product level |labelA, labelB>.
RegisterState product_state(std::shared_ptr<const LevelBasis> basis, const std::string& label_a,
                            const std::string& label_b);

// Normalized linear combination. Throws ZeroVector when the combination
// vanishes, BasisMismatch when bases differ.
RegisterState superpose(const std::vector<std::pair<Complex, RegisterState>>& terms);

// <a|b>
Complex overlap(const RegisterState& a, const RegisterState& b);

// Population of molecule-A (or -B) level `label` in `s`.
double level_population_a(const RegisterState& s, const std::string& label);
double level_population_b(const RegisterState& s, const std::string& label);

// Hamiltonian over a LevelBasis, split into a Hermitian part (rad/s) and
// an optional diagonal decay part (non-positive rates, rad/s); the full
// generator is H - (i/2) diag(gamma).
struct HermitianOperator {
    Matrix hermitian;                  // H = H^dagger
    Eigen::VectorXd decay_rates;      // gamma_k >= 0, empty when no decay
    std::shared_ptr<const LevelBasis> basis;

    bool has_decay() const { return decay_rates.size() > 0 && decay_rates.maxCoeff() > 0.0; }
};

}  // namespace molgate

#endif

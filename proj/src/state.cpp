#include "molgate/state.hpp"

#include <cmath>

#include "molgate/errors.hpp"

namespace molgate {

LevelBasis::LevelBasis(std::vector<std::string> labels_a, std::vector<std::string> labels_b)
    : labels_a_(std::move(labels_a)), labels_b_(std::move(labels_b)) {
    if (labels_a_.empty() || labels_b_.empty())
        throw ConfigError("LevelBasis: empty level list");
}

LevelBasis LevelBasis::from_system(const System& sys) {
    std::vector<std::string> la, lb;
    for (const auto& lv : sys.molecule_a.levels) la.push_back(lv.label);
    for (const auto& lv : sys.molecule_b.levels) lb.push_back(lv.label);
    return LevelBasis(std::move(la), std::move(lb));
}

namespace {
int find_label(const std::vector<std::string>& labels, const std::string& label,
               const char* side) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == label) return static_cast<int>(i);
    }
    throw UnknownLabel(std::string("no level '") + label + "' on molecule " + side);
}
}  // namespace

int LevelBasis::index_a(const std::string& label) const {
    return find_label(labels_a_, label, "A");
}

int LevelBasis::index_b(const std::string& label) const {
    return find_label(labels_b_, label, "B");
}

RegisterState product_state(std::shared_ptr<const LevelBasis> basis, const std::string& label_a,
                            const std::string& label_b) {
    RegisterState s;
    s.basis = basis;
    s.amplitudes = Vector::Zero(basis->dim());
    s.amplitudes(basis->flat_index(basis->index_a(label_a), basis->index_b(label_b))) = 1.0;
    return s;
}

RegisterState superpose(const std::vector<std::pair<Complex, RegisterState>>& terms) {
    if (terms.empty()) throw ZeroVector("superpose: no terms");
    const auto& basis = terms.front().second.basis;
    Vector sum = Vector::Zero(basis->dim());
    for (const auto& [c, st] : terms) {
        if (!(*st.basis == *basis)) throw BasisMismatch("superpose: mixed bases");
        sum += c * st.amplitudes;
    }
    const double n = sum.norm();
    if (n < 1e-14) throw ZeroVector("superpose: combination vanishes");
    RegisterState out;
    out.basis = basis;
    out.amplitudes = sum / n;
    return out;
}

Complex overlap(const RegisterState& a, const RegisterState& b) {
    if (!(*a.basis == *b.basis)) throw BasisMismatch("overlap: mixed bases");
    return a.amplitudes.dot(b.amplitudes);  // Eigen dot conjugates the left side
}

namespace {
double side_population(const RegisterState& s, const std::string& label, bool side_a) {
    const LevelBasis& basis = *s.basis;
    const int target = side_a ? basis.index_a(label) : basis.index_b(label);
    double pop = 0.0;
    for (int k = 0; k < basis.dim(); ++k) {
        const auto [a, b] = basis.unflatten(k);
        if ((side_a ? a : b) == target) pop += std::norm(s.amplitudes(k));
    }
    return pop;
}
}  // namespace

double level_population_a(const RegisterState& s, const std::string& label) {
    return side_population(s, label, true);
}

double level_population_b(const RegisterState& s, const std::string& label) {
    return side_population(s, label, false);
}

}  // namespace molgate

#include "hklat/quadspace.hpp"

namespace hklat {

QuadSpace::QuadSpace(Mat<Rat> gram, std::vector<std::string> labels)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
    if (gram_.rows() != gram_.cols()) throw DegenerateForm("QuadSpace: Gram matrix not square");
    if (gram_ != gram_.transposed()) throw DegenerateForm("QuadSpace: Gram matrix not symmetric");
    if (rank(gram_) != gram_.rows()) throw DegenerateForm("QuadSpace: Gram matrix is singular");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != gram_.rows())
        throw DimensionMismatch("QuadSpace: label count mismatch");
}

Rat QuadSpace::form(const Vec<Rat>& u, const Vec<Rat>& v) const { return form_eval(gram_, u, v); }

MukaiSpace::MukaiSpace(QuadSpace base)
    : base_(std::move(base)), total_([&] {
          int b2 = base_.dim();
          Mat<Rat> g(b2 + 2, b2 + 2);
          g.at(0, b2 + 1) = Rat(-1);
          g.at(b2 + 1, 0) = Rat(-1);
          for (int i = 0; i < b2; ++i)
              for (int j = 0; j < b2; ++j) g.at(1 + i, 1 + j) = base_.gram().at(i, j);
          std::vector<std::string> labels;
          labels.reserve(b2 + 2);
          labels.emplace_back("alpha");
          for (int i = 0; i < b2; ++i) {
              labels.push_back(base_.labels().empty() ? "e" + std::to_string(i + 1)
                                                      : base_.labels()[i]);
          }
          labels.emplace_back("beta");
          return QuadSpace(std::move(g), std::move(labels));
      }()) {}

int MukaiSpace::degree(int k) const {
    if (k == alpha_index()) return -2;
    if (k == beta_index()) return 2;
    return 0;
}

Vec<Rat> MukaiSpace::alpha() const {
    Vec<Rat> v(dim(), Rat(0));
    v[alpha_index()] = Rat(1);
    return v;
}

Vec<Rat> MukaiSpace::beta() const {
    Vec<Rat> v(dim(), Rat(0));
    v[beta_index()] = Rat(1);
    return v;
}

Vec<Rat> MukaiSpace::embed(const Vec<Rat>& h2coords) const { return embed_as<Rat>(h2coords); }

Vec<Rat> MukaiSpace::h2_part(const Vec<Rat>& v) const {
    if (static_cast<int>(v.size()) != dim()) throw DimensionMismatch("h2_part: length mismatch");
    return Vec<Rat>(v.begin() + 1, v.end() - 1);
}

bool MukaiSpace::in_h2(const Vec<Rat>& v) const {
    if (static_cast<int>(v.size()) != dim()) throw DimensionMismatch("in_h2: length mismatch");
    return v[alpha_index()].is_zero() && v[beta_index()].is_zero();
}

MukaiSpace make_mukai(const QuadSpace& base) { return MukaiSpace(base); }

Isometry::Isometry(const MukaiSpace& space, Mat<Rat> matrix) : space_(&space), m_(std::move(matrix)) {
    if (m_.rows() != space.dim() || m_.cols() != space.dim())
        throw DimensionMismatch("Isometry: matrix shape mismatch");
    const Mat<Rat>& g = space.total().gram();
    if (m_.transposed() * g * m_ != g) throw BadInput("Isometry: M^T G M != G");
}

Isometry Isometry::compose(const Isometry& inner) const {
    return Isometry(*space_, m_ * inner.matrix());
}

Isometry exp_cup(const MukaiSpace& space, const Vec<Rat>& omega) {
    if (!space.in_h2(omega)) throw NotDegreeZero("exp_cup: omega has nonzero alpha or beta coordinate");
    int n = space.dim();
    Mat<Rat> m = Mat<Rat>::identity(n);
    int a = space.alpha_index(), b = space.beta_index();
    Rat q = space.total().form(omega);
    // alpha column
    for (int i = 1; i < n - 1; ++i) m.at(i, a) = omega[i];
    m.at(b, a) = q / Rat(2);
    // H^2 columns
    for (int j = 1; j < n - 1; ++j) {
        Vec<Rat> ej(n, Rat(0));
        ej[j] = Rat(1);
        m.at(b, j) = space.total().form(omega, ej);
    }
    return Isometry(space, std::move(m));
}

Mat<Rat> grading_matrix(const MukaiSpace& space) {
    Mat<Rat> h(space.dim(), space.dim());
    h.at(space.alpha_index(), space.alpha_index()) = Rat(-2);
    h.at(space.beta_index(), space.beta_index()) = Rat(2);
    return h;
}

}  // namespace hklat

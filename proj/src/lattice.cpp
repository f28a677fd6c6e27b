#include "msod/lattice.hpp"

#include <stdexcept>

#include "msod/action.hpp"

namespace msod {

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

BigMatrix widen(const IntMatrix& m) {
    BigMatrix out;
    out.reserve(m.size());
    for (const auto& row : m) out.emplace_back(row.begin(), row.end());
    return out;
}

IntMatrix narrow(const BigMatrix& m) {
    IntMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const auto& v : m[i]) {
            if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
                throw std::overflow_error("lattice entry exceeds int64");
            out[i].push_back(static_cast<std::int64_t>(v));
        }
    return out;
}

BigInt exact_determinant(const BigMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    auto a = m;
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
    // Bareiss fraction-free elimination.
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return a[n - 1][n - 1] * sign;
}

std::int64_t determinant(const IntMatrix& m) {
    const auto det = exact_determinant(widen(m));
    if (det > std::numeric_limits<std::int64_t>::max() || det < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("determinant exceeds int64");
    return static_cast<std::int64_t>(det);
}

bool is_unipotent_upper(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (m[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

std::string_view to_string(Direction d) { return d == Direction::Left ? "left" : "right"; }

Direction direction_from_string(std::string_view s) {
    if (s == "left") return Direction::Left;
    if (s == "right") return Direction::Right;
    throw InputError("unknown mutation direction '" + std::string(s) + "'");
}

ExceptionalSequence::ExceptionalSequence(IntMatrix form, BigMatrix vectors,
                                         const std::vector<std::size_t>& block_sizes, std::vector<std::string> labels)
    : form_(std::move(form)), vectors_(std::move(vectors)), labels_(std::move(labels)) {
    const auto n = form_.size();
    for (const auto& row : form_)
        if (row.size() != n) throw std::invalid_argument("bilinear form is not square");
    if (vectors_.size() != n) throw std::invalid_argument("number of vectors differs from lattice rank");
    for (const auto& v : vectors_)
        if (v.size() != n) throw std::invalid_argument("vector length differs from lattice rank");
    std::size_t total = 0;
    for (std::size_t b = 0; b < block_sizes.size(); ++b) {
        if (block_sizes[b] == 0) throw std::invalid_argument("empty block");
        for (std::size_t k = 0; k < block_sizes[b]; ++k) owner_.push_back(b);
        total += block_sizes[b];
    }
    if (total != n) throw std::invalid_argument("block sizes do not sum to the lattice rank");
    if (labels_.empty())
        for (std::size_t b = 0; b < block_sizes.size(); ++b) labels_.push_back("B" + std::to_string(b));
    if (labels_.size() != block_sizes.size()) throw std::invalid_argument("one label per block required");
    if (!is_unimodular()) throw std::invalid_argument("vectors do not form a unimodular basis");
}

ExceptionalSequence ExceptionalSequence::standard(IntMatrix form, const std::vector<std::size_t>& block_sizes,
                                                  std::vector<std::string> labels) {
    const auto n = form.size();
    auto basis = widen(identity_matrix(n));
    return ExceptionalSequence(std::move(form), std::move(basis), block_sizes, std::move(labels));
}

BigInt ExceptionalSequence::pairing(std::size_t i, std::size_t j) const {
    if (i >= size() || j >= size()) throw std::out_of_range("pairing index out of range");
    const auto& u = vectors_[i];
    const auto& v = vectors_[j];
    BigInt acc = 0;
    for (std::size_t a = 0; a < size(); ++a) {
        if (u[a] == 0) continue;
        BigInt row = 0;
        for (std::size_t b = 0; b < size(); ++b)
            if (form_[a][b] != 0 && v[b] != 0) row += form_[a][b] * v[b];
        acc += u[a] * row;
    }
    return acc;
}

BigMatrix ExceptionalSequence::gram() const {
    BigMatrix g(size(), BigVector(size()));
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) g[i][j] = pairing(i, j);
    return g;
}

bool ExceptionalSequence::is_semiorthogonal() const {
    for (std::size_t i = 0; i < size(); ++i) {
        if (pairing(i, i) != 1) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (pairing(i, j) != 0) return false;
    }
    return true;
}

bool ExceptionalSequence::is_unimodular() const {
    const auto d = exact_determinant(vectors_);
    return d == 1 || d == -1;
}

std::vector<ExceptionalSequence::Block> ExceptionalSequence::blocks() const {
    std::vector<Block> out;
    std::vector<bool> seen(labels_.size(), false);
    for (std::size_t p = 0; p < owner_.size(); ++p) {
        const auto id = owner_[p];
        if (!out.empty() && out.back().id == id) {
            out.back().positions.push_back(p);
            continue;
        }
        if (seen[id]) throw std::logic_error("block '" + labels_[id] + "' is not contiguous");
        seen[id] = true;
        out.push_back({id, labels_[id], {p}});
    }
    return out;
}

std::vector<std::size_t> ExceptionalSequence::block_sizes() const {
    std::vector<std::size_t> out;
    for (const auto& b : blocks()) out.push_back(b.positions.size());
    return out;
}

namespace {

BigVector minus_multiple(const BigVector& v, const BigInt& c, const BigVector& w) {
    BigVector out(v.size());
    for (std::size_t a = 0; a < v.size(); ++a) out[a] = v[a] - c * w[a];
    return out;
}

}  // namespace

ExceptionalSequence ExceptionalSequence::mutate_left(std::size_t i) const {
    if (i == 0 || i >= size()) throw std::out_of_range("mutate_left index out of range");
    ExceptionalSequence out = *this;
    const auto c = pairing(i - 1, i);
    out.vectors_[i - 1] = minus_multiple(vectors_[i], c, vectors_[i - 1]);
    out.vectors_[i] = vectors_[i - 1];
    std::swap(out.owner_[i - 1], out.owner_[i]);
    return out;
}

ExceptionalSequence ExceptionalSequence::mutate_right(std::size_t i) const {
    if (i + 1 >= size()) throw std::out_of_range("mutate_right index out of range");
    ExceptionalSequence out = *this;
    const auto c = pairing(i, i + 1);
    out.vectors_[i] = vectors_[i + 1];
    out.vectors_[i + 1] = minus_multiple(vectors_[i], c, vectors_[i + 1]);
    std::swap(out.owner_[i], out.owner_[i + 1]);
    return out;
}

ScriptResult apply_script(const ExceptionalSequence& seq, const std::vector<Move>& moves) {
    ScriptResult result{seq, {}};
    auto& cur = result.sequence;
    for (const auto& move : moves) {
        const auto blocks = cur.blocks();
        const bool left = move.direction == Direction::Left;
        if (move.block >= blocks.size() || (left && move.block == 0) || (!left && move.block + 1 >= blocks.size()))
            throw InputError("mutation script: block " + std::to_string(move.block) + " cannot move " +
                             std::string(to_string(move.direction)) + " (" + std::to_string(blocks.size()) +
                             " blocks)");
        const auto& first = blocks[left ? move.block - 1 : move.block];
        const auto& second = blocks[left ? move.block : move.block + 1];

        bool orthogonal = true;
        for (auto a : first.positions)
            for (auto b : second.positions) orthogonal = orthogonal && cur.pairing(a, b) == 0 && cur.pairing(b, a) == 0;

        const auto start = first.positions.front();
        const auto na = first.positions.size();
        const auto nb = second.positions.size();
        if (left) {
            for (std::size_t j = 0; j < nb; ++j)
                for (std::size_t p = start + na + j; p > start + j; --p) cur = cur.mutate_left(p);
        } else {
            for (std::size_t j = na; j-- > 0;)
                for (std::size_t p = start + j; p < start + j + nb; ++p) cur = cur.mutate_right(p);
        }
        result.records.push_back({move, orthogonal, left ? second.label : first.label, left ? first.label : second.label});
    }
    return result;
}

}  // namespace msod

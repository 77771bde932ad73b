#include "resolvdim/vectorspace.hpp"

#include <cctype>
#include <string>

#include "resolvdim/error.hpp"

namespace resolvdim {

bool Vector::is_zero() const noexcept {
    for (auto c : coeffs)
        if (c.rep != 0) return false;
    return true;
}

Skeleton skeleton(const Vector& v) {
    Skeleton s;
    for (std::size_t i = 0; i < v.coeffs.size(); ++i)
        if (v.coeffs[i].rep != 0) s.mask |= 1u << i;
    return s;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
    unsigned __int128 r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        r *= base;
        if (r > UINT64_MAX) throw Error(ErrorCode::Overflow, "power exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

VectorSpace::VectorSpace(std::uint32_t q, std::uint32_t n, std::uint64_t vertex_cap)
    : field_(q), n_(n), count_(0) {
    if (n == 0 || n > 31)
        throw Error(ErrorCode::BadParameters, "dimension must be in 1..31, got " + std::to_string(n));
    std::uint64_t total = 0;
    try {
        total = checked_pow(q, n) - 1;
    } catch (const Error&) {
        throw Error(ErrorCode::InstanceTooLarge, "q^n overflows");
    }
    if (total > vertex_cap || total > UINT32_MAX - 1)
        throw Error(ErrorCode::InstanceTooLarge,
                    "q^n - 1 = " + std::to_string(total) + " exceeds vertex cap " + std::to_string(vertex_cap));
    count_ = static_cast<std::uint32_t>(total);
}

VertexId VectorSpace::encode(const Vector& v) const {
    if (v.size() != n_) throw Error(ErrorCode::DimensionMismatch, "vector length differs from n");
    std::uint64_t id = 0;
    for (std::size_t i = v.size(); i-- > 0;) {
        if (!field_.contains(v.coeffs[i])) throw Error(ErrorCode::OutOfRange, "coefficient outside field");
        id = id * q() + v.coeffs[i].rep;
    }
    if (id == 0) throw Error(ErrorCode::OutOfRange, "zero vector is not a vertex");
    return static_cast<VertexId>(id);
}

Vector VectorSpace::decode(VertexId id) const {
    if (id == 0 || id > count_)
        throw Error(ErrorCode::OutOfRange, "vertex id " + std::to_string(id) + " outside [1, q^n - 1]");
    Vector v;
    v.coeffs.resize(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
        v.coeffs[i].rep = id % q();
        id /= q();
    }
    return v;
}

Skeleton VectorSpace::skeleton_of(VertexId id) const {
    if (id == 0 || id > count_)
        throw Error(ErrorCode::OutOfRange, "vertex id " + std::to_string(id) + " outside [1, q^n - 1]");
    Skeleton s;
    for (std::uint32_t i = 0; i < n_; ++i, id /= q())
        if (id % q() != 0) s.mask |= 1u << i;
    return s;
}

std::vector<VertexId> VectorSpace::enumerate_vertices() const {
    std::vector<VertexId> out(count_);
    for (std::uint32_t i = 0; i < count_; ++i) out[i] = i + 1;
    return out;
}

VertexId VectorSpace::unit(std::uint32_t i) const {
    if (i == 0 || i > n_) throw Error(ErrorCode::OutOfRange, "basis index " + std::to_string(i) + " outside 1..n");
    return static_cast<VertexId>(checked_pow(q(), i - 1));
}

VertexId VectorSpace::indicator(std::uint32_t mask) const {
    if (mask == 0 || (n_ < 32 && (mask >> n_) != 0))
        throw Error(ErrorCode::OutOfRange, "mask is empty or exceeds n bits");
    std::uint64_t id = 0;
    std::uint64_t place = 1;
    for (std::uint32_t i = 0; i < n_; ++i, place *= q())
        if (mask & (1u << i)) id += place;
    return static_cast<VertexId>(id);
}

std::string VectorSpace::format(VertexId id) const {
    const Vector v = decode(id);
    std::string out;
    for (std::uint32_t i = 0; i < n_; ++i) {
        const auto c = v.coeffs[i].rep;
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (c != 1) out += std::to_string(c);
        out += 'e';
        out += std::to_string(i + 1);
    }
    return out;
}

namespace {

void skip_spaces(std::string_view s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

std::uint64_t read_number(std::string_view s, std::size_t& pos, std::size_t base) {
    const std::size_t start = pos;
    std::uint64_t value = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        value = value * 10 + std::uint64_t(s[pos] - '0');
        if (value > UINT32_MAX) throw ParseError("number too large", base + start);
        ++pos;
    }
    if (pos == start) throw ParseError("expected a number", base + start);
    return value;
}

}  // namespace

// `base` offsets reported positions when parsing inside a larger string.
static VertexId parse_at(const VectorSpace& vs, std::string_view s, std::size_t base) {
    Vector v;
    v.coeffs.assign(vs.dimension(), FieldElement{0});
    std::size_t pos = 0;
    std::uint64_t last_index = 0;
    skip_spaces(s, pos);
    if (pos == s.size()) throw ParseError("empty vertex", base + pos);
    while (true) {
        skip_spaces(s, pos);
        const std::size_t term_start = pos;
        std::uint64_t coeff = 1;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) coeff = read_number(s, pos, base);
        if (pos >= s.size() || s[pos] != 'e') throw ParseError("expected 'e'", base + pos);
        ++pos;
        const std::size_t index_pos = pos;
        const std::uint64_t index = read_number(s, pos, base);
        if (coeff == 0 || coeff >= vs.q())
            throw ParseError("coefficient must be in 1.." + std::to_string(vs.q() - 1), base + term_start);
        if (index == 0 || index > vs.dimension())
            throw ParseError("basis index must be in 1.." + std::to_string(vs.dimension()), base + index_pos);
        if (index <= last_index) throw ParseError("basis indices must ascend", base + index_pos);
        last_index = index;
        v.coeffs[index - 1].rep = static_cast<std::uint32_t>(coeff);
        skip_spaces(s, pos);
        if (pos == s.size()) break;
        if (s[pos] != '+') throw ParseError("expected '+'", base + pos);
        ++pos;
    }
    return vs.encode(v);
}

VertexId VectorSpace::parse(std::string_view text) const { return parse_at(*this, text, 0); }

VertexSet VectorSpace::parse_set(std::string_view text) const {
    VertexSet out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(parse_at(*this, text.substr(start, end - start), start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string VectorSpace::format_set(const VertexSet& set) const {
    std::string out;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += ',';
        out += format(set[i]);
    }
    return out;
}

}  // namespace resolvdim

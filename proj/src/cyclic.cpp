#include "odpc/cyclic.hpp"

#include "odpc/numtheory.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <set>
#include <string>
#include <thread>

namespace odpc {

// ---------------------------------------------------------------- construction

CodeSpace::CodeSpace(std::uint32_t n)
    : cosets_(n), field_(FieldContext::build(cosets_.m(), n))
{
    minpolys_.reserve(cosets_.cosets().size());
    for (const auto& c : cosets_.cosets())
        minpolys_.push_back(odpc::minimal_polynomial(c.elements, field_));
}

const BinaryPolynomial& CodeSpace::minimal_polynomial(std::uint32_t leader) const
{
    const auto& all = cosets_.cosets();
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i].leader == leader)
            return minpolys_[i];
    throw std::invalid_argument(std::to_string(leader) + " is not a coset leader");
}

CyclicCode CodeSpace::code(std::span<const std::uint32_t> nonzero_leaders) const
{
    std::set<std::uint32_t> chosen;
    for (auto s : nonzero_leaders) {
        if (!cosets_.is_leader(s))
            throw std::invalid_argument(std::to_string(s) + " is not a coset leader modulo " +
                                        std::to_string(n()));
        if (!chosen.insert(s).second)
            throw std::invalid_argument("duplicate coset leader " + std::to_string(s));
    }
    CyclicCode code;
    code.n = n();
    code.nonzero_leaders.assign(chosen.begin(), chosen.end());
    code.generator = BinaryPolynomial::from_bits(1);
    const auto& all = cosets_.cosets();
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (chosen.contains(all[i].leader))
            code.k += static_cast<unsigned>(all[i].elements.size());
        else
            code.generator = code.generator * minpolys_[i];
    }
    if (code.generator.degree() != static_cast<int>(code.n - code.k))
        throw std::logic_error("generator degree does not match n - k");
    return code;
}

CyclicCode code_from_leaders(std::uint32_t n, std::span<const std::uint32_t> nonzero_leaders)
{
    return CodeSpace(n).code(nonzero_leaders);
}

// ---------------------------------------------------------------- weight distribution

std::uint64_t WeightDistribution::total() const
{
    std::uint64_t t = 0;
    for (const auto& [w, c] : counts)
        t += c;
    return t;
}

unsigned WeightDistribution::min_nonzero_weight() const
{
    for (const auto& [w, c] : counts)
        if (w > 0 && c > 0)
            return w;
    throw std::logic_error("weight distribution has no nonzero codeword");
}

std::vector<unsigned> WeightDistribution::nonzero_weights() const
{
    std::vector<unsigned> out;
    for (const auto& [w, c] : counts)
        if (w > 0 && c > 0)
            out.push_back(w);
    return out;
}

// ---------------------------------------------------------------- enumeration

namespace {

std::size_t words_for(std::uint32_t n)
{
    return (n + 63) / 64;
}

// Row x^i g(x) packed into `words` 64-bit words.
std::vector<std::uint64_t> packed_rows(const CyclicCode& code, std::size_t words)
{
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(code.k) * words, 0);
    for (unsigned i = 0; i < code.k; ++i) {
        const auto row = code.generator.shifted(i);
        const auto& w = row.words();
        std::copy(w.begin(), w.end(), rows.begin() + static_cast<std::ptrdiff_t>(i * words));
    }
    return rows;
}

// Visits every codeword of one block: the top `block_bits` message bits are fixed
// to `block`, the low bits run through a Gray code.
template <std::size_t W, typename Visit>
void scan_block(const std::vector<std::uint64_t>& rows, unsigned k, unsigned block_bits, std::uint64_t block,
                Visit&& visit)
{
    const unsigned low = k - block_bits;
    std::array<std::uint64_t, W> word{};
    for (unsigned b = 0; b < block_bits; ++b) {
        if ((block >> b) & 1) {
            const auto* r = &rows[(low + b) * W];
            for (std::size_t j = 0; j < W; ++j)
                word[j] ^= r[j];
        }
    }
    auto weight = [&word] {
        unsigned w = 0;
        for (std::size_t j = 0; j < W; ++j)
            w += static_cast<unsigned>(std::popcount(word[j]));
        return w;
    };
    if (block != 0)
        visit(weight());
    const std::uint64_t count = std::uint64_t{1} << low;
    for (std::uint64_t i = 1; i < count; ++i) {
        const auto* r = &rows[static_cast<std::size_t>(std::countr_zero(i)) * W];
        for (std::size_t j = 0; j < W; ++j)
            word[j] ^= r[j];
        visit(weight());
    }
}

void scan_block_dynamic(const std::vector<std::uint64_t>& rows, std::size_t words, unsigned k,
                        unsigned block_bits, std::uint64_t block, auto&& visit)
{
    const unsigned low = k - block_bits;
    std::vector<std::uint64_t> word(words, 0);
    for (unsigned b = 0; b < block_bits; ++b)
        if ((block >> b) & 1)
            for (std::size_t j = 0; j < words; ++j)
                word[j] ^= rows[(low + b) * words + j];
    auto weight = [&word] {
        unsigned w = 0;
        for (auto x : word)
            w += static_cast<unsigned>(std::popcount(x));
        return w;
    };
    if (block != 0)
        visit(weight());
    const std::uint64_t count = std::uint64_t{1} << low;
    for (std::uint64_t i = 1; i < count; ++i) {
        const auto r = static_cast<std::size_t>(std::countr_zero(i)) * words;
        for (std::size_t j = 0; j < words; ++j)
            word[j] ^= rows[r + j];
        visit(weight());
    }
}

// Calls make_visitor(worker) -> visitor for each worker, and runs the blocks assigned
// to it (block index modulo worker count). Deterministic merge is the caller's job.
template <typename MakeVisitor>
void enumerate_weights(const CyclicCode& code, const EnumerationOptions& opts, MakeVisitor&& make_visitor)
{
    if (code.k > opts.max_dimension)
        throw DimensionLimitError("dimension " + std::to_string(code.k) + " exceeds the enumeration limit " +
                                  std::to_string(opts.max_dimension));
    if (code.k > 62)
        throw DimensionLimitError("dimension " + std::to_string(code.k) + " cannot be enumerated");
    const std::size_t words = words_for(code.n);
    const auto rows = packed_rows(code, words);
    const unsigned workers = std::max(1u, opts.workers);
    unsigned block_bits = 0;
    if (workers > 1)
        block_bits = std::min<unsigned>(code.k, static_cast<unsigned>(std::bit_width(workers)) + 3);
    const std::uint64_t blocks = std::uint64_t{1} << block_bits;

    auto run = [&](unsigned id) {
        auto visit = make_visitor(id);
        for (std::uint64_t b = id; b < blocks; b += workers) {
            switch (words) {
            case 1: scan_block<1>(rows, code.k, block_bits, b, visit); break;
            case 2: scan_block<2>(rows, code.k, block_bits, b, visit); break;
            case 3: scan_block<3>(rows, code.k, block_bits, b, visit); break;
            case 4: scan_block<4>(rows, code.k, block_bits, b, visit); break;
            default: scan_block_dynamic(rows, words, code.k, block_bits, b, visit); break;
            }
        }
    };
    if (workers == 1) {
        run(0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned id = 0; id < workers; ++id)
        pool.emplace_back(run, id);
    for (auto& t : pool)
        t.join();
}

}  // namespace

unsigned min_distance(const CyclicCode& code, const EnumerationOptions& opts)
{
    if (code.k == 0)
        throw std::invalid_argument("min_distance: the zero code has no nonzero codeword");
    const unsigned workers = std::max(1u, opts.workers);
    std::vector<unsigned> best(workers, std::numeric_limits<unsigned>::max());
    enumerate_weights(code, opts, [&best](unsigned id) {
        return [&slot = best[id]](unsigned w) {
            if (w < slot)
                slot = w;
        };
    });
    return *std::min_element(best.begin(), best.end());
}

WeightDistribution weight_distribution(const CyclicCode& code, const EnumerationOptions& opts)
{
    WeightDistribution wd;
    wd.counts[0] = 1;
    if (code.k == 0)
        return wd;
    const unsigned workers = std::max(1u, opts.workers);
    std::vector<std::vector<std::uint64_t>> hist(workers, std::vector<std::uint64_t>(code.n + 1, 0));
    enumerate_weights(code, opts, [&hist](unsigned id) {
        return [&h = hist[id]](unsigned w) { ++h[w]; };
    });
    for (unsigned w = 0; w <= code.n; ++w) {
        std::uint64_t c = 0;
        for (const auto& h : hist)
            c += h[w];
        if (c != 0)
            wd.counts[w] += c;
    }
    return wd;
}

// ---------------------------------------------------------------- encoding helpers

std::vector<BinaryPolynomial> generator_rows(const CyclicCode& code)
{
    std::vector<BinaryPolynomial> rows;
    rows.reserve(code.k);
    for (unsigned i = 0; i < code.k; ++i)
        rows.push_back(code.generator.shifted(i));
    return rows;
}

BinaryPolynomial encode_rows(const CyclicCode& code, const BinaryPolynomial& message)
{
    if (message.degree() >= static_cast<int>(code.k))
        throw std::invalid_argument("encode_rows: message longer than the dimension");
    BinaryPolynomial word;
    for (unsigned i = 0; i < code.k; ++i)
        if (message.coeff(i))
            word = word + code.generator.shifted(i);
    return word;
}

BinaryPolynomial message_of(const CyclicCode& code, const BinaryPolynomial& codeword)
{
    auto [q, r] = poly_divrem(codeword, code.generator);
    if (!r.is_zero() || q.degree() >= static_cast<int>(code.k))
        throw std::invalid_argument("message_of: word is not a codeword");
    return q;
}

bool contains(const CyclicCode& code, const BinaryPolynomial& word)
{
    if (word.degree() >= static_cast<int>(code.n))
        return false;
    return poly_divrem(word, code.generator).second.is_zero();
}

BinaryPolynomial trace_codeword(const FieldContext& ctx, std::span<const TraceTerm> terms)
{
    const std::uint32_t n = ctx.n();
    if (n != ctx.size() - 1)
        throw std::invalid_argument("trace representation needs full length n = 2^m - 1");
    BinaryPolynomial word;
    for (std::uint32_t i = 0; i < n; ++i) {
        int bit = 0;
        for (const auto& t : terms) {
            const auto e = static_cast<std::int64_t>((static_cast<std::uint64_t>(i) * t.exponent) % n);
            bit ^= ctx.trace(ctx.mul(t.coefficient, ctx.exp(e)));
        }
        if (bit)
            word.set_coeff(i, true);
    }
    return word;
}

unsigned trace_weight(const FieldContext& ctx, std::span<const TraceTerm> terms)
{
    const auto word = trace_codeword(ctx, terms);
    const std::uint32_t n = ctx.n();
    unsigned zeros = 0;
    for (std::uint32_t i = 0; i < n; ++i)
        if (!word.coeff(i))
            ++zeros;
    return n - zeros;
}

// ---------------------------------------------------------------- MacWilliams

namespace {

std::vector<std::vector<BigInt>> binomials(unsigned n)
{
    std::vector<std::vector<BigInt>> c(n + 1, std::vector<BigInt>(n + 1, 0));
    for (unsigned i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (unsigned j = 1; j <= i; ++j)
            c[i][j] = c[i - 1][j - 1] + (j < i ? c[i - 1][j] : BigInt(0));
    }
    return c;
}

BigInt krawtchouk(const std::vector<std::vector<BigInt>>& c, unsigned n, unsigned j, unsigned i)
{
    BigInt sum = 0;
    for (unsigned s = 0; s <= j && s <= i; ++s) {
        if (j - s > n - i)
            continue;
        BigInt term = c[i][s] * c[n - i][j - s];
        if (s % 2)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

void check_total(const WeightDistribution& wd, unsigned n, unsigned k)
{
    BigInt total = 0;
    for (const auto& [w, cnt] : wd.counts) {
        if (w > n)
            throw std::invalid_argument("weight exceeds length");
        total += cnt;
    }
    if (total != (BigInt(1) << k))
        throw std::invalid_argument("weight distribution does not sum to 2^k");
}

BigInt dual_count(const std::vector<std::vector<BigInt>>& c, const WeightDistribution& wd, unsigned n,
                  unsigned k, unsigned j)
{
    BigInt sum = 0;
    for (const auto& [w, cnt] : wd.counts)
        sum += BigInt(cnt) * krawtchouk(c, n, j, w);
    const BigInt scale = BigInt(1) << k;
    if (sum < 0 || sum % scale != 0)
        throw std::logic_error("MacWilliams transform produced a non-integral count");
    return sum / scale;
}

}  // namespace

BigInt dual_weight_count(const WeightDistribution& wd, unsigned n, unsigned k, unsigned j)
{
    check_total(wd, n, k);
    if (j > n)
        return 0;
    return dual_count(binomials(n), wd, n, k, j);
}

WeightDistribution macwilliams_transform(const WeightDistribution& wd, unsigned n, unsigned k)
{
    check_total(wd, n, k);
    const auto c = binomials(n);
    WeightDistribution dual;
    for (unsigned j = 0; j <= n; ++j) {
        const BigInt a = dual_count(c, wd, n, k, j);
        if (a == 0)
            continue;
        if (a > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("dual weight count exceeds 64 bits");
        dual.counts[j] = static_cast<std::uint64_t>(a);
    }
    return dual;
}

bool mean_weight_identity(const WeightDistribution& wd, unsigned n, unsigned k)
{
    BigInt first = 0;
    for (const auto& [w, cnt] : wd.counts)
        first += BigInt(w) * cnt;
    const BigInt a1 = dual_weight_count(wd, n, k, 1);
    return 2 * first == (BigInt(1) << k) * (BigInt(n) - a1);
}

}  // namespace odpc

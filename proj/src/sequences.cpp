#include "treealg/linear.hpp"
#include "treealg/trees.hpp"

#include <map>
#include <mutex>

namespace treealg {

namespace {

std::vector<mpz_class> catalanValues(int count) {
    std::vector<mpz_class> c(static_cast<std::size_t>(count) + 1);
    c[1] = 1;
    for (int n = 2; n <= count; ++n)
        for (int l = 1; l < n; ++l) c[n] += c[l] * c[n - l];
    return c;
}

// C_n counts reduced planar trees; Q_m counts non-empty sequences of them with m leaves.
std::vector<mpz_class> superCatalanValues(int count) {
    std::vector<mpz_class> c(static_cast<std::size_t>(count) + 1), q(static_cast<std::size_t>(count) + 1);
    c[1] = 1;
    q[1] = 1;
    for (int n = 2; n <= count; ++n) {
        for (int k = 1; k < n; ++k) c[n] += c[k] * q[n - k];
        q[n] = 2 * c[n];
    }
    return c;
}

std::vector<mpz_class> dropZero(std::vector<mpz_class> v) {
    v.erase(v.begin());
    return v;
}

std::vector<mpz_class> compute(SequenceKind kind, int count) {
    switch (kind) {
        case SequenceKind::Catalan:
            return dropZero(catalanValues(count));
        case SequenceKind::SuperCatalan:
            return dropZero(superCatalanValues(count));
        case SequenceKind::LogCatalan:
            return logarithmicDerivation(dropZero(catalanValues(count)));
        case SequenceKind::LogSuperCatalan:
            return logarithmicDerivation(dropZero(superCatalanValues(count)));
        case SequenceKind::OddArity: {
            auto c = dropZero(catalanValues(count));
            auto lc = logarithmicDerivation(c);
            std::vector<mpz_class> out;
            for (int n = 1; n <= count; ++n) out.push_back(n * c[n - 1] - lc[n - 1]);
            return out;
        }
        case SequenceKind::OneVarConstants: {
            auto c = catalanValues(count);
            c[0] = 1;
            std::vector<mpz_class> out;
            for (int n = 1; n <= count; ++n) out.push_back(c[n] - c[n - 1]);
            return out;
        }
    }
    return {};
}

const std::map<std::string, SequenceKind, std::less<>>& kindNames() {
    static const std::map<std::string, SequenceKind, std::less<>> names{
        {"catalan", SequenceKind::Catalan},
        {"super-catalan", SequenceKind::SuperCatalan},
        {"log-catalan", SequenceKind::LogCatalan},
        {"log-super-catalan", SequenceKind::LogSuperCatalan},
        {"odd-arity", SequenceKind::OddArity},
        {"one-var-constants", SequenceKind::OneVarConstants},
    };
    return names;
}

}  // namespace

std::vector<mpz_class> logarithmicDerivation(const std::vector<mpz_class>& a) {
    PowerSeries f(a.size());
    f[0] = 1;
    for (std::size_t i = 0; i < a.size(); ++i) f[i + 1] = Rational(a[i]);
    PowerSeries g = f.log().eulerDerivative();
    std::vector<mpz_class> out;
    for (std::size_t n = 1; n <= a.size(); ++n) {
        if (g[n].get_den() != 1) throw Error(ErrorCode::InternalInconsistency, "non-integral logarithmic derivative");
        out.push_back(g[n].get_num());
    }
    return out;
}

SequenceTable sequence(SequenceKind kind, int count) {
    if (count < 1) throw Error(ErrorCode::BadPosition, "sequence length must be >= 1");
    static std::mutex mu;
    static std::map<SequenceKind, std::vector<mpz_class>> cache;
    std::lock_guard lock(mu);
    auto& cached = cache[kind];
    if (static_cast<int>(cached.size()) < count) cached = compute(kind, count);
    return {kind, std::vector<mpz_class>(cached.begin(), cached.begin() + count)};
}

std::optional<SequenceKind> sequenceKindFromName(std::string_view name) {
    const auto& names = kindNames();
    if (auto it = names.find(name); it != names.end()) return it->second;
    return std::nullopt;
}

std::string sequenceKindName(SequenceKind kind) {
    for (const auto& [name, k] : kindNames())
        if (k == kind) return name;
    return "?";
}

}  // namespace treealg

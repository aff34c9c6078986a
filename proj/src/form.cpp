#include "spingeo/form.hpp"

#include <array>

#include <nlohmann/json.hpp>

namespace spingeo {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    static const auto table = [] {
        std::array<std::array<long, 16>, 16> t{};
        for (int i = 0; i < 16; ++i) {
            t[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
        }
        return t;
    }();
    if (n < 16) return table[n][k];
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::vector<std::vector<int>> increasing_tuples(int n, int k) {
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(binom(n, k)));
    std::vector<int> t(k);
    for (int i = 0; i < k; ++i) t[i] = i;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    if (k > n) return out;
    for (;;) {
        out.push_back(t);
        int i = k - 1;
        while (i >= 0 && t[i] == n - k + i) --i;
        if (i < 0) break;
        ++t[i];
        for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
    }
    // order by colex rank so tuple_rank() addresses components directly
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return tuple_rank(a) < tuple_rank(b);
    });
    return out;
}

long tuple_rank(const std::vector<int>& tuple) {
    long r = 0;
    for (std::size_t j = 0; j < tuple.size(); ++j)
        r += binom(tuple[j], static_cast<int>(j) + 1);
    return r;
}

double max_abs(const FormD& f) {
    double m = 0;
    for (const auto& tup : increasing_tuples(f.dim(), f.degree()))
        m = std::max(m, std::fabs(f(tup)));
    return m;
}

FormD hodge_star(const FormD& f, const std::vector<std::vector<double>>& g, int orientation) {
    const int n = f.dim(), k = f.degree();
    if (k > n) throw std::invalid_argument("hodge_star: degree exceeds dimension");

    // inverse metric and sqrt(det g)
    std::vector<std::vector<double>> ginv(n, std::vector<double>(n));
    {
        // Gauss-Jordan; n <= 10
        std::vector<std::vector<double>> a = g;
        for (int i = 0; i < n; ++i) ginv[i][i] = 1.0;
        for (int c = 0; c < n; ++c) {
            int piv = c;
            for (int r = c + 1; r < n; ++r)
                if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
            std::swap(a[piv], a[c]);
            std::swap(ginv[piv], ginv[c]);
            double d = a[c][c];
            if (d == 0.0) throw std::domain_error("hodge_star: singular metric");
            for (int j = 0; j < n; ++j) { a[c][j] /= d; ginv[c][j] /= d; }
            for (int r = 0; r < n; ++r) {
                if (r == c || a[r][c] == 0.0) continue;
                double m = a[r][c];
                for (int j = 0; j < n; ++j) { a[r][j] -= m * a[c][j]; ginv[r][j] -= m * ginv[c][j]; }
            }
        }
    }
    double det = 1.0;
    {
        std::vector<std::vector<double>> a = g;
        for (int c = 0; c < n; ++c) {
            int piv = c;
            for (int r = c + 1; r < n; ++r)
                if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
            if (piv != c) { std::swap(a[piv], a[c]); det = -det; }
            det *= a[c][c];
            if (a[c][c] == 0.0) break;
            for (int r = c + 1; r < n; ++r) {
                double m = a[r][c] / a[c][c];
                for (int j = c; j < n; ++j) a[r][j] -= m * a[c][j];
            }
        }
    }
    double vol = std::sqrt(std::fabs(det)) * (orientation >= 0 ? 1.0 : -1.0);

    // raise indices of f
    FormD fup(n, k);
    auto tuples_k = increasing_tuples(n, k);
    for (const auto& I : tuples_k) {
        double acc = 0;
        for (const auto& J : tuples_k) {
            double fj = f(J);
            if (fj == 0.0) continue;
            // det of ginv minor
            double d = 0;
            std::vector<int> perm(k);
            for (int p = 0; p < k; ++p) perm[p] = p;
            do {
                int sgn = 1;
                for (int p = 0; p < k; ++p)
                    for (int q = p + 1; q < k; ++q)
                        if (perm[p] > perm[q]) sgn = -sgn;
                double prod = 1;
                for (int p = 0; p < k; ++p) prod *= ginv[I[p]][J[perm[p]]];
                d += sgn * prod;
            } while (std::next_permutation(perm.begin(), perm.end()));
            acc += d * fj;
        }
        fup(I) = acc;
    }

    // (*f)_J = vol * sum_I f^I eps_{I J}
    FormD out(n, n - k);
    for (const auto& I : tuples_k) {
        double fi = fup(I);
        if (fi == 0.0) continue;
        std::vector<int> J;
        std::vector<bool> used(n, false);
        for (int i : I) used[i] = true;
        for (int i = 0; i < n; ++i)
            if (!used[i]) J.push_back(i);
        // permutation sign of (I, J) relative to (0..n-1)
        std::vector<int> p = I;
        p.insert(p.end(), J.begin(), J.end());
        int sgn = 1;
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = a + 1; b < p.size(); ++b)
                if (p[a] > p[b]) sgn = -sgn;
        out(J) += vol * sgn * fi;
    }
    return out;
}

double form_inner(const FormD& a, const FormD& b,
                  const std::vector<std::vector<double>>& ginv) {
    if (a.degree() != b.degree() || a.dim() != b.dim())
        throw std::invalid_argument("form_inner: shape mismatch");
    const int k = a.degree();
    auto tuples = increasing_tuples(a.dim(), k);
    double acc = 0;
    for (const auto& I : tuples) {
        double ai = a(I);
        if (ai == 0.0) continue;
        for (const auto& J : tuples) {
            double bj = b(J);
            if (bj == 0.0) continue;
            double d = 0;
            std::vector<int> perm(k);
            for (int p = 0; p < k; ++p) perm[p] = p;
            do {
                int sgn = 1;
                for (int p = 0; p < k; ++p)
                    for (int q = p + 1; q < k; ++q)
                        if (perm[p] > perm[q]) sgn = -sgn;
                double prod = 1;
                for (int p = 0; p < k; ++p) prod *= ginv[I[p]][J[perm[p]]];
                d += sgn * prod;
            } while (std::next_permutation(perm.begin(), perm.end()));
            acc += ai * d * bj;
        }
    }
    return acc;
}

namespace {

template <class T, class Fmt>
std::string form_to_json_impl(const Form<T>& f, Fmt fmt) {
    nlohmann::ordered_json j;
    j["degree"] = f.degree();
    j["dim"] = f.dim();
    nlohmann::ordered_json comps = nlohmann::ordered_json::object();
    for (const auto& tup : increasing_tuples(f.dim(), f.degree())) {
        const T& c = f(tup);
        if (c == T(0)) continue;
        std::string key;
        for (std::size_t i = 0; i < tup.size(); ++i) {
            if (i) key += ",";
            key += std::to_string(tup[i]);
        }
        comps[key] = fmt(c);
    }
    j["components"] = comps;
    return j.dump();
}

} // namespace

std::string form_to_json(const FormQ& f) {
    return form_to_json_impl(f, [](const CRat& c) {
        return to_string(c.re) + "," + to_string(c.im);
    });
}

std::string form_to_json(const FormD& f) {
    return form_to_json_impl(f, [](double c) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g,0", c);
        return std::string(buf);
    });
}

FormD form_from_json_d(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    FormD f(j.at("dim").get<int>(), j.at("degree").get<int>());
    for (auto it = j.at("components").begin(); it != j.at("components").end(); ++it) {
        std::vector<int> tup;
        std::string key = it.key();
        std::size_t pos = 0;
        while (pos < key.size()) {
            std::size_t comma = key.find(',', pos);
            if (comma == std::string::npos) comma = key.size();
            tup.push_back(std::stoi(key.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        std::string val = it.value().get<std::string>();
        double re = std::stod(val.substr(0, val.find(',')));
        f(tup) = re;
    }
    return f;
}

} // namespace spingeo

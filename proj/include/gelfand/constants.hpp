#pragma once

// Closed-form constants of the Hardy-Rellich inequalities, the singular
// solution amplitude and the supersolution construction.

namespace gelfand {

/// A_{n,k} = 16^{-k} prod_{i=0}^{k-1} (n-4k+4i)^2 (n+4k-4i-4)^2. Valid for n > 4k.
double A_const(int n, int k);
/// B_{n,k} = 16^{-k} ((n-2)/2)^2 prod_{i=1}^{k} (n-4i-2)^2 (n+4i-2)^2. Valid for n > 4k+2.
double B_const(int n, int k);
inline bool A_valid(int n, int k) { return n > 4 * k; }
inline bool B_valid(int n, int k) { return n > 4 * k + 2; }

/// gamma_{n,a} = ((n-2)/2)^2 - ((a-2)/2)^2
double hr_gamma(int n, double alpha);
/// gamma_bar_{n,a} = ((n-2)/2)^2 + ((a-2)/2)^2
double hr_gamma_bar(int n, double alpha);

struct MuValue {
    double value = 0.0;
    int argmin = 0;
};

/// mu_{n,a} = min_{j >= 0} |gamma_{n,a} + j(n-2+j)|^2 and the minimising j.
MuValue hr_mu(int n, double alpha);

enum class HRVariant { Laplacian, Gradient };

struct HRProduct {
    double value = 0.0;
    bool log_branch = false;  // mu-product vanished, log-weighted constant used
};

/// Laplacian: prod_{i=1}^k mu_{n,a_i}, a_i = -4k+4i, for the weight |x|^{-4k};
/// if it vanishes, 2^k prod gamma_bar_{n,-4i} prod ((2i+1)/2)^2 for the weight
/// |x|^{-4k} (log|x|)^{-2k}.
/// Gradient: ((n-2)/2)^2 prod mu for |x|^{-4k-2}; if it vanishes,
/// 2^{k-2} prod gamma_bar_{n,-4i-2} prod ((2i+3)/2)^2 for |x|^{-4k-2} (log|x|)^{-2k-2}.
HRProduct hr_product(int n, int k, HRVariant variant);

/// Log-branch constants alone (used by the stability weight table).
double hr_log_laplacian_constant(int n, int k);
double hr_log_gradient_constant(int n, int k);

/// 2^{-4k-2} prod_{i=0}^{k-1} (4i-3)^2 (4i-5)^2, with the product set to 0 for k = 0.
double oned_constant(int k);

/// lambda_S = 2^m m! prod_{k=1}^m (n-2k).
double lambda_S(int m, int n);

struct SupersolutionConstants {
    double C = 0.0;       // C_{n,m}
    double r_min = 0.0;   // minimiser of exp(|C| r^{2m-3}) / r^3
    double lambda = 0.0;  // lambda_{n,m}
};

/// C_{n,m} = [prod_{j=1}^m (2j-3) prod_{j=0}^{m-1} (n+2j-3)]^{-1} and
/// lambda_{n,m} = min_r exp(|C| r^{2m-3}) / r^3. m even, n >= 4.
SupersolutionConstants supersolution_constants(int m, int n);

}  // namespace gelfand

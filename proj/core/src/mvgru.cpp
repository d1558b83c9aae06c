#include "sentinel/mvgru.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sentinel/rng.hpp"

namespace sentinel {

namespace {

constexpr double kTwoPi = 6.283185307179586;

// Fixed parameter layout; order is the contract for gradient vectors.
enum ParamId {
    kConvW, kConvB,
    kEncWs, kEncWh, kEncB,
    kEncMuW, kEncMuB, kEncSgW, kEncSgB,
    kCatWs, kCatWh, kCatB,
    kPriorMu, kPriorSgRaw, kPriorPiRaw,
    kDecWz, kDecWh, kDecB,
    kDecMuW, kDecMuB, kDecSgW, kDecSgB,
    kDeconvW, kDeconvB,
    kGruWr, kGruUr, kGruBr,
    kGruWu, kGruUu, kGruBu,
    kGruWn, kGruUn, kGruBn,
    kNumParams,
};

double softplus(double x) { return x > 30.0 ? x : std::log1p(std::exp(x)); }

double sigmoid(double x) {
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

std::vector<double> softmax(const std::vector<double>& v) {
    const double m = *std::max_element(v.begin(), v.end());
    std::vector<double> out(v.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = std::exp(v[i] - m);
        sum += out[i];
    }
    for (double& x : out) x /= sum;
    return out;
}

std::vector<double> matvec(const Tensor& w, const std::vector<double>& x) {
    std::vector<double> y(w.rows, 0.0);
    for (int r = 0; r < w.rows; ++r) {
        double acc = 0.0;
        for (int c = 0; c < w.cols; ++c) acc += w.at(r, c) * x[c];
        y[r] = acc;
    }
    return y;
}

void add_matvec(const Tensor& w, const std::vector<double>& x, std::vector<double>& y) {
    for (int r = 0; r < w.rows; ++r) {
        double acc = 0.0;
        for (int c = 0; c < w.cols; ++c) acc += w.at(r, c) * x[c];
        y[r] += acc;
    }
}

// dx += W^T dy
void add_matvec_t(const Tensor& w, const std::vector<double>& dy, std::vector<double>& dx) {
    for (int r = 0; r < w.rows; ++r) {
        const double d = dy[r];
        for (int c = 0; c < w.cols; ++c) dx[c] += w.at(r, c) * d;
    }
}

// gW += dy x^T
void add_outer(Tensor& gw, const std::vector<double>& dy, const std::vector<double>& x) {
    for (int r = 0; r < gw.rows; ++r) {
        const double d = dy[r];
        for (int c = 0; c < gw.cols; ++c) gw.at(r, c) += d * x[c];
    }
}

void add_vec(Tensor& gb, const std::vector<double>& dy) {
    for (int r = 0; r < gb.rows; ++r) gb.data[r] += dy[r];
}

}  // namespace

NoiseDraws NoiseDraws::zeros(int ticks, int dims, int latent, int components) {
    NoiseDraws n;
    n.eps.assign(ticks, std::vector<std::vector<double>>(
                            dims, std::vector<double>(latent, 0.0)));
    n.gumbel.assign(ticks, std::vector<std::vector<double>>(
                               dims, std::vector<double>(components, 0.0)));
    return n;
}

NoiseDraws NoiseDraws::sample(int ticks, int dims, int latent, int components,
                              std::uint64_t seed) {
    Rng rng(seed);
    NoiseDraws n = zeros(ticks, dims, latent, components);
    for (int t = 0; t < ticks; ++t) {
        for (int d = 0; d < dims; ++d) {
            for (int l = 0; l < latent; ++l) n.eps[t][d][l] = rng.normal();
            for (int k = 0; k < components; ++k) {
                const double u = std::clamp(rng.uniform01(), 1e-12, 1.0 - 1e-12);
                n.gumbel[t][d][k] = -std::log(-std::log(u));
            }
        }
    }
    return n;
}

MvgruModel::MvgruModel(MvgruConfig cfg, std::uint64_t seed) : cfg_(std::move(cfg)) {
    if (cfg_.num_components < 2) throw DomainError("mixture needs at least 2 components");
    const int f = cfg_.feature_dim, h = cfg_.hidden_dim, l = cfg_.latent_dim;
    const int he = cfg_.enc_dim, hd = cfg_.dec_dim, k = cfg_.num_components;
    const int x = f + l;

    params_.resize(kNumParams);
    auto make = [&](ParamId id, const std::string& name, int rows, int cols) {
        params_[id] = Tensor{name, rows, cols, std::vector<double>(
                                                   static_cast<std::size_t>(rows) * cols, 0.0)};
    };
    make(kConvW, "conv_w", f, 3);
    make(kConvB, "conv_b", f, 1);
    make(kEncWs, "enc_w_s", he, f);
    make(kEncWh, "enc_w_h", he, h);
    make(kEncB, "enc_b", he, 1);
    make(kEncMuW, "enc_mu_w", l, he);
    make(kEncMuB, "enc_mu_b", l, 1);
    make(kEncSgW, "enc_sg_w", l, he);
    make(kEncSgB, "enc_sg_b", l, 1);
    make(kCatWs, "cat_w_s", k, f);
    make(kCatWh, "cat_w_h", k, h);
    make(kCatB, "cat_b", k, 1);
    make(kPriorMu, "prior_mu", k, l);
    make(kPriorSgRaw, "prior_sg_raw", k, l);
    make(kPriorPiRaw, "prior_pi_raw", k, 1);
    make(kDecWz, "dec_w_z", hd, l);
    make(kDecWh, "dec_w_h", hd, h);
    make(kDecB, "dec_b", hd, 1);
    make(kDecMuW, "dec_mu_w", f, hd);
    make(kDecMuB, "dec_mu_b", f, 1);
    make(kDecSgW, "dec_sg_w", 1, hd);
    make(kDecSgB, "dec_sg_b", 1, 1);
    make(kDeconvW, "deconv_w", 3, f);
    make(kDeconvB, "deconv_b", 1, 1);
    make(kGruWr, "gru_w_r", h, x);
    make(kGruUr, "gru_u_r", h, h);
    make(kGruBr, "gru_b_r", h, 1);
    make(kGruWu, "gru_w_u", h, x);
    make(kGruUu, "gru_u_u", h, h);
    make(kGruBu, "gru_b_u", h, 1);
    make(kGruWn, "gru_w_n", h, x);
    make(kGruUn, "gru_u_n", h, h);
    make(kGruBn, "gru_b_n", h, 1);

    Rng rng(seed ^ 0xadвасилne...);
}

}  // namespace sentinel

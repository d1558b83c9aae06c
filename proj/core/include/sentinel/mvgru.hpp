#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sentinel/domain.hpp"

namespace sentinel {

struct EmptyTrainingSetError : DomainError {
    EmptyTrainingSetError() : DomainError("training set is empty") {}
};
struct DivergedLossError : DomainError {
    DivergedLossError() : DomainError("training loss diverged (NaN)") {}
};
struct UntrainedModelError : DomainError {
    UntrainedModelError() : DomainError("model has not been trained") {}
};

struct MvgruConfig {
    int num_components = 3;   // K, mixture components (>= 2)
    int latent_dim = 4;       // L
    int hidden_dim = 8;       // H, recurrent state
    int feature_dim = 4;      // F, conv channels
    int enc_dim = 8;
    int dec_dim = 8;
    double sigma_floor = 1e-3;
    double temperature_init = 5.0;
    double temperature_final = 0.1;
    double anomaly_threshold = 0.3;  // eta, on calibrated scores
    bool learn_prior_weights = true; // categorical prior learned vs fixed uniform
    double learning_rate = 1e-2;
    double grad_clip = 5.0;
};

struct Tensor {
    std::string name;
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

// Per-window sampling noise; fixing it makes the loss a deterministic
// function of the parameters (reparameterization).
struct NoiseDraws {
    // eps[t][n][l], standard normal; gumbel[t][n][k] = -log(-log(u)).
    std::vector<std::vector<std::vector<double>>> eps;
    std::vector<std::vector<std::vector<double>>> gumbel;

    static NoiseDraws zeros(int ticks, int dims, int latent, int components);
    static NoiseDraws sample(int ticks, int dims, int latent, int components,
                             std::uint64_t seed);
};

struct EncodeOut {
    std::vector<double> mu;     // L
    std::vector<double> sigma;  // L, strictly positive
};

struct DecodeOut {
    std::vector<double> mu_feature;  // F, feature-space reconstruction
    double sigma = 0.0;              // observation noise, strictly positive
    double s_tilde = 0.0;            // reconstructed value (isolated-step deconv)
};

struct PriorOut {
    std::vector<double> mu;     // L
    std::vector<double> sigma;  // L
};

struct TrainReport {
    std::vector<double> loss_trace;          // mean negative ELBO per epoch
    std::vector<double> temperature_trace;   // annealed Gumbel-softmax temperature
};

// Variational recurrent autoencoder with a Gumbel-softmax mixture prior,
// scoring telemetry windows by reconstruction error. One recurrent chain per
// telemetry dimension, parameters shared across dimensions.
class MvgruModel {
  public:
    MvgruModel(MvgruConfig cfg, std::uint64_t seed);

    const MvgruConfig& config() const { return cfg_; }
    std::vector<Tensor>& params() { return params_; }
    const std::vector<Tensor>& params() const { return params_; }
    Tensor& param(const std::string& name);
    const Tensor& param(const std::string& name) const;

    // Conv feature extraction over the time axis for one dimension's series.
    std::vector<std::vector<double>> extract_features(const std::vector<double>& series) const;

    EncodeOut encode(const std::vector<double>& features,
                     const std::vector<double>& h_prev) const;
    DecodeOut decode(const std::vector<double>& z,
                     const std::vector<double>& h_prev) const;
    static std::vector<double> gumbel_softmax(const std::vector<double>& pi_bar,
                                              double temperature,
                                              const std::vector<double>& gumbel_noise);
    PriorOut prior_mixture(const std::vector<double>& c) const;
    std::vector<double> prior_weights() const;  // pi
    double prior_marginal_density(const std::vector<double>& z) const;

    // Negative ELBO of one window under fixed noise: reconstruction NLL plus
    // the latent and categorical KL terms, averaged per (tick, dimension).
    double negative_elbo(const WorkloadWindow& window, const NoiseDraws& noise,
                         double temperature) const;
    // Same value; also accumulates analytic gradients (same order as params()).
    double negative_elbo_backward(const WorkloadWindow& window, const NoiseDraws& noise,
                                  double temperature, std::vector<Tensor>& grads) const;
    std::vector<Tensor> zero_gradients() const;

    // Raw per-tick scores: -log p(s_t | z_t) averaged over dimensions,
    // evaluated with zero noise (z at the posterior mean).
    std::vector<double> anomaly_scores(const WorkloadWindow& window) const;
    double raw_window_score(const WorkloadWindow& window) const;   // max over ticks
    double calibrated_window_score(const WorkloadWindow& window) const;
    bool window_anomalous(const WorkloadWindow& window) const;

    TrainReport train(const std::vector<WorkloadWindow>& healthy_windows, int epochs,
                      std::uint64_t seed);
    // Min-max score calibration on held-out healthy windows, so the anomaly
    // threshold reads as a fraction of the healthy score range.
    void calibrate(const std::vector<WorkloadWindow>& healthy_holdout);

    bool trained() const { return trained_; }
    bool calibrated() const { return calibrated_; }

    std::string to_checkpoint_json() const;
    static MvgruModel from_checkpoint_json(const std::string& text);
    void save_checkpoint(const std::string& path) const;
    static MvgruModel load_checkpoint(const std::string& path);

  private:
    struct Forward;  // full per-window cache, defined in the .cpp

    MvgruConfig cfg_;
    std::vector<Tensor> params_;
    bool trained_ = false;
    bool calibrated_ = false;
    double calib_min_ = 0.0;
    double calib_max_ = 1.0;
};

}  // namespace sentinel

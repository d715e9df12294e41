#pragma once

#include <cstdint>
#include <functional>
#include <memory>

#include "qkl/bitstring.hpp"
#include "qkl/rng.hpp"

namespace qkl {

// Adversarial evaluator handed to tracing algorithms. The three hooks
// (estimate / trace-measure / repair) stand in for the quantum API /
// projective-trace / state-repair machinery: stateless pirates answer i.i.d.
// and ignore the hooks, collapsible pirates degrade after a trace measurement
// until repaired.
class PirateProgram {
  public:
    enum class Kind { stateless_classical, collapsible };

    virtual ~PirateProgram() = default;

    virtual Kind kind() const = 0;

    // Distinguishing challenge (x, y) -> guess bit.
    virtual int guess(const BitString &x, const BitString &y) = 0;

    // Hook entry points; counters feed the step-trace assertions.
    void notify_estimate(double p) {
        ++estimate_calls;
        on_estimate(p);
    }
    void notify_trace_measured() {
        ++trace_measure_calls;
        on_trace_measured();
    }
    void notify_repair(uint64_t budget, double recorded_estimate) {
        ++repair_calls;
        on_repair(budget, recorded_estimate);
    }

    virtual double internal_estimate() const { return 0.0; }

    uint64_t estimate_calls = 0;
    uint64_t trace_measure_calls = 0;
    uint64_t repair_calls = 0;

  protected:
    virtual void on_estimate(double) {}
    virtual void on_trace_measured() {}
    virtual void on_repair(uint64_t, double) {}
};

// i.i.d. responder around a plain guessing function.
class StatelessPirate : public PirateProgram {
  public:
    using GuessFn = std::function<int(const BitString &, const BitString &)>;

    explicit StatelessPirate(GuessFn fn) : fn_(std::move(fn)) {}

    Kind kind() const override { return Kind::stateless_classical; }
    int guess(const BitString &x, const BitString &y) override { return fn_(x, y) & 1; }

  private:
    GuessFn fn_;
};

inline std::unique_ptr<StatelessPirate> make_coin_flip_pirate(Rng rng) {
    auto shared = std::make_shared<Rng>(rng);
    return std::make_unique<StatelessPirate>([shared](const BitString &, const BitString &) { return shared->bit(); });
}

// Pirate whose success probability drops to coin flipping after a trace
// measurement until `repair` restores it. Exercises the repair step of the
// sequential trace loop: skipping repair leaves the pirate damaged for every
// later iteration.
class CollapsiblePirate : public PirateProgram {
  public:
    CollapsiblePirate(StatelessPirate::GuessFn healthy, double healthy_estimate, Rng rng)
        : healthy_(std::move(healthy)), healthy_estimate_(healthy_estimate), rng_(rng) {}

    Kind kind() const override { return Kind::collapsible; }

    int guess(const BitString &x, const BitString &y) override {
        if (damaged_) return rng_.bit();
        return healthy_(x, y) & 1;
    }

    double internal_estimate() const override { return damaged_ ? 0.5 : healthy_estimate_; }

    bool damaged() const { return damaged_; }

  protected:
    void on_estimate(double p) override { recorded_ = p; }

    void on_trace_measured() override { damaged_ = true; }

    void on_repair(uint64_t, double recorded_estimate) override {
        // Restores the pre-measurement state bookmarked by the estimate hook.
        if (recorded_estimate >= 0.0) damaged_ = false;
    }

  private:
    StatelessPirate::GuessFn healthy_;
    double healthy_estimate_;
    Rng rng_;
    bool damaged_ = false;
    double recorded_ = -1.0;
};

}  // namespace qkl

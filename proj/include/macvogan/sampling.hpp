#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "macvogan/multisegment.hpp"
#include "macvogan/partition_fn.hpp"
#include "macvogan/tame_parameter.hpp"

namespace macvogan {

/// Seeded generators for the randomized property sweeps. All draws are from
/// std::mt19937_64, so a fixed seed fixes every sweep byte for byte.
class Sampler {
  public:
    explicit Sampler(uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    int64_t uniform(int64_t lo, int64_t hi) {
        return std::uniform_int_distribution<int64_t>(lo, hi)(rng_);
    }

    ResidueCharacter residue_character(const FieldParams& field) {
        return Residue(uniform(0, field.q - 2), field.q - 1);
    }

    TameCharacter tame_character(const FieldParams& field, int64_t max_den = 4) {
        int64_t den = uniform(1, max_den);
        return TameCharacter{residue_character(field), Phase(uniform(0, den - 1), den)};
    }

    Partition partition(int64_t n) {
        std::vector<int64_t> parts;
        while (n > 0) {
            int64_t p = uniform(1, n);
            parts.push_back(p);
            n -= p;
        }
        return Partition(std::move(parts));
    }

    CuspidalDatum cuspidal(const FieldParams& field, int64_t d) {
        auto all = enumerate_cuspidals(field, d);
        return all[static_cast<std::size_t>(uniform(0, static_cast<int64_t>(all.size()) - 1))];
    }

    /// Random degree-N partition function. Repeated cuspidal picks merge
    /// their partitions, so the draw always terminates.
    PartitionFn partition_fn(const FieldParams& field, int64_t n) {
        std::map<CuspidalDatum, std::vector<int64_t>> acc;
        int64_t remaining = n;
        while (remaining > 0) {
            int64_t d = uniform(1, remaining);
            int64_t w = uniform(1, remaining / d);
            auto parts = partition(w).parts;
            auto& slot = acc[cuspidal(field, d)];
            slot.insert(slot.end(), parts.begin(), parts.end());
            remaining -= d * w;
        }
        std::vector<std::pair<CuspidalDatum, Partition>> entries;
        for (auto& [tau, parts] : acc) entries.emplace_back(tau, Partition(std::move(parts)));
        return PartitionFn::make(field, std::move(entries));
    }

    /// Random multisegment of total degree N.
    Multisegment multisegment(const FieldParams& field, int64_t n) {
        std::vector<Segment> segments;
        int64_t remaining = n;
        while (remaining > 0) {
            int64_t d = uniform(1, remaining);
            int64_t l = uniform(1, remaining / d);
            segments.push_back({cuspidal(field, d), l});
            remaining -= d * l;
        }
        return Multisegment::make(field, std::move(segments));
    }

    /// Random tame parameter of dimension N. Phase denominators are kept
    /// small so stabilizer sweeps stay desk-sized.
    TameParameter tame_parameter(const FieldParams& field, int64_t n, int64_t max_den = 4) {
        std::vector<TameSegmentParam> blocks;
        int64_t remaining = n;
        while (remaining > 0) {
            int64_t d = uniform(1, remaining);
            int64_t l = uniform(1, remaining / d);
            int64_t den = uniform(1, max_den);
            blocks.push_back({cuspidal(field, d), Phase(uniform(0, den - 1), den), l});
            remaining -= d * l;
        }
        return TameParameter::make(field, std::move(blocks));
    }

  private:
    std::mt19937_64 rng_;
};

} // namespace macvogan

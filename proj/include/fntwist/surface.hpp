#pragma once

#include "fntwist/twist.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace fntwist {

class InvalidEmbeddingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Cross-ratio coordinates of a labeled ideal triangulation of a general
/// marked surface. Arc labels are 1-based.
class SurfaceCoords {
public:
    /// Throws InvalidCoordinatesError unless n >= 4 and every entry is
    /// positive and finite.
    explicit SurfaceCoords(std::vector<double> coords);

    std::size_t size() const noexcept { return coords_.size(); }
    /// Coordinate of arc `label` (1-based).
    double arc(std::size_t label) const { return coords_.at(label - 1); }
    std::span<const double> values() const noexcept { return coords_; }

    friend bool operator==(const SurfaceCoords&, const SurfaceCoords&) = default;

private:
    std::vector<double> coords_;
};

/// The four arcs of a triangulated once-marked annulus containing the twist
/// curve, in the roles of arcs 1-4 of the annulus chart (1-based labels).
///
/// Whether these arcs really bound such an annulus is a property of the
/// triangulation, which is not modelled here; the caller vouches for it.
class AnnulusEmbedding {
public:
    /// Throws InvalidEmbeddingError for repeated or zero labels.
    AnnulusEmbedding(std::size_t i1, std::size_t i2, std::size_t i3, std::size_t i4);

    const std::array<std::size_t, 4>& labels() const noexcept { return labels_; }

private:
    std::array<std::size_t, 4> labels_;
};

/// Replace the four embedded coordinates by their Fenchel-Nielsen twist
/// (closed form); all other entries are copied unchanged.
///
/// Throws InvalidEmbeddingError if a label exceeds s.size(), and
/// InvalidCoordinatesError if the extracted quadruple is not a valid
/// annulus point.
SurfaceCoords apply_local_twist(const SurfaceCoords& s, const AnnulusEmbedding& emb, TwistParameter t);

}  // namespace fntwist

#include "fntwist/surface.hpp"

#include <cmath>
#include <string>

namespace fntwist {

SurfaceCoords::SurfaceCoords(std::vector<double> coords) : coords_(std::move(coords))
{
    if (coords_.size() < 4)
        throw InvalidCoordinatesError("surface needs at least 4 arc coordinates (got " +
                                      std::to_string(coords_.size()) + ")");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!std::isfinite(coords_[i]) || !(coords_[i] > 0.0))
            throw InvalidCoordinatesError("surface coordinate " + std::to_string(i + 1) +
                                          " must be strictly positive and finite");
}

AnnulusEmbedding::AnnulusEmbedding(std::size_t i1, std::size_t i2, std::size_t i3, std::size_t i4)
    : labels_{i1, i2, i3, i4}
{
    for (std::size_t a = 0; a < 4; ++a) {
        if (labels_[a] == 0)
            throw InvalidEmbeddingError("embedding labels are 1-based; got 0 for arc " + std::to_string(a + 1));
        for (std::size_t b = a + 1; b < 4; ++b)
            if (labels_[a] == labels_[b])
                throw InvalidEmbeddingError("embedding labels must be distinct; arcs " + std::to_string(a + 1) +
                                            " and " + std::to_string(b + 1) + " both use " +
                                            std::to_string(labels_[a]));
    }
}

SurfaceCoords apply_local_twist(const SurfaceCoords& s, const AnnulusEmbedding& emb, TwistParameter t)
{
    std::array<double, 4> local{};
    for (std::size_t a = 0; a < 4; ++a) {
        const std::size_t label = emb.labels()[a];
        if (label > s.size())
            throw InvalidEmbeddingError("embedding label " + std::to_string(label) + " exceeds surface size " +
                                        std::to_string(s.size()));
        local[a] = s.arc(label);
    }

    const AnnulusCoords twisted = twist_closed_form(AnnulusCoords{local}, t);

    std::vector<double> out(s.values().begin(), s.values().end());
    for (std::size_t a = 0; a < 4; ++a)
        out[emb.labels()[a] - 1] = twisted[a];
    return SurfaceCoords{std::move(out)};
}

}  // namespace fntwist

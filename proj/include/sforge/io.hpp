#pragma once

#include <string>

#include "sforge/algebra.hpp"

namespace sforge {

std::string sha256_hex(const std::string& data);

// Canonical text: sorted keys, two-space indent, one trailing newline. The
// same presentation always prints the same bytes, so canonical files compare
// with memcmp and hash stably. Vertices are 1-based on the wire.
std::string presentation_to_json(const AlgebraPresentation& pres);
AlgebraPresentation presentation_from_json(const std::string& text);

AlgebraPresentation load_presentation(const std::string& path);
void save_presentation(const std::string& path, const AlgebraPresentation& pres);

std::string quiver_to_dot(const AlgebraPresentation& pres);

// content address of a computation for the result cache
std::string cache_key(const AlgebraPresentation& pres, const std::string& command,
                      const std::string& flags);

}  // namespace sforge

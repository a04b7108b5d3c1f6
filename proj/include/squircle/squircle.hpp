#ifndef SQUIRCLE_SQUIRCLE_HPP
#define SQUIRCLE_SQUIRCLE_HPP

#include "contour2d.hpp"
#include "core.hpp"
#include "domains.hpp"
#include "fields2d.hpp"
#include "fields3d.hpp"
#include "mesh_io.hpp"
#include "oracle.hpp"
#include "polygonize3d.hpp"
#include "verification.hpp"

#endif

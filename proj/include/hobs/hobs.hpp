#pragma once

#include "hobs/sphere_algebra.hpp"
#include "hobs/higher_order.hpp"
#include "hobs/orientation_field.hpp"
#include "hobs/dynamics.hpp"
#include "hobs/transfer.hpp"

#pragma once

#include "gaussclone/certificate.hpp"
#include "gaussclone/circuit.hpp"
#include "gaussclone/design.hpp"
#include "gaussclone/errors.hpp"
#include "gaussclone/gaussian.hpp"
#include "gaussclone/network.hpp"
#include "gaussclone/simulator.hpp"

#pragma once

#include "albert/algebra.hpp"
#include "albert/catalog.hpp"
#include "albert/certificate.hpp"
#include "albert/envelope.hpp"
#include "albert/errors.hpp"
#include "albert/field.hpp"
#include "albert/io.hpp"
#include "albert/isomorphism.hpp"
#include "albert/isotopy.hpp"
#include "albert/matrix.hpp"
#include "albert/nilrank.hpp"
#include "albert/witnesses.hpp"

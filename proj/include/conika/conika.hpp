// Copyright 2026 The conika authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/// @file conika.hpp  Umbrella header.
#pragma once

#include "certifier.hpp"
#include "complex_matrix.hpp"
#include "designs.hpp"
#include "eigen.hpp"
#include "entanglement.hpp"
#include "json_io.hpp"
#include "linalg.hpp"
#include "povm.hpp"
#include "random.hpp"
#include "witnesses.hpp"

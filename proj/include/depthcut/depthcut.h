/* Copyright 2026 The depthcut Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef DEPTHCUT_DEPTHCUT_H_
#define DEPTHCUT_DEPTHCUT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DC_API __declspec(dllexport)
#else
#define DC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dc_status {
  DC_OK = 0,
  DC_ERR_ARGUMENT = 1,     /* null handle, bad enum, bad size */
  DC_ERR_IO = 2,           /* file could not be read or written */
  DC_ERR_FORMAT = 3,       /* malformed scene or fragment document */
  DC_ERR_VALIDATION = 4,   /* intersecting or vertical objects */
  DC_ERR_ORACLE = 5,       /* the output has a depth cycle */
  DC_ERR_CYCLIC = 6,       /* painter mode on cyclic input */
  DC_ERR_UNKNOWN = 7,      /* unknown family or algorithm */
  DC_ERR_INTERNAL = 8
} dc_status;

typedef enum dc_algorithm { DC_ALG_TRIANGLES = 0, DC_ALG_TRIANGLES_K = 1, DC_ALG_LINES = 2 } dc_algorithm;
typedef enum dc_strategy { DC_STRATEGY_TRIVIAL = 0, DC_STRATEGY_GREEDY = 1, DC_STRATEGY_EXACT = 2 } dc_strategy;
typedef enum dc_render_mode { DC_RENDER_PAINTER = 0, DC_RENDER_ZBUFFER = 1, DC_RENDER_DIFF = 2 } dc_render_mode;

typedef struct dc_scene dc_scene;
typedef struct dc_fragments dc_fragments;

typedef struct dc_cut_params {
  dc_algorithm algorithm;
  dc_strategy strategy;
  long r;       /* 0 selects the algorithm's default */
  int rho;      /* hierarchy branching, >= 2 */
  uint64_t seed;
} dc_cut_params;

DC_API const char* dc_version(void);
/* Message of the last failed call on this thread; empty when none. */
DC_API const char* dc_last_error(void);
DC_API void dc_string_free(char* s);
DC_API dc_cut_params dc_default_cut_params(void);

/* Scenes ------------------------------------------------------------------ */

DC_API dc_status dc_scene_generate(const char* family, int n, uint64_t seed, dc_scene** out);
DC_API dc_status dc_scene_load(const char* path, dc_scene** out);
DC_API dc_status dc_scene_save(const dc_scene* scene, const char* path);
DC_API dc_status dc_scene_to_json(const dc_scene* scene, char** out);
DC_API dc_status dc_scene_counts(const dc_scene* scene, size_t* triangles, size_t* segments);
/* Disjointness and non-verticality; DC_ERR_VALIDATION with a message otherwise. */
DC_API dc_status dc_scene_validate(const dc_scene* scene);
DC_API void dc_scene_free(dc_scene* scene);
/* Newline-separated generator family names. */
DC_API dc_status dc_families(char** out);

/* Cutting ----------------------------------------------------------------- */

/* Runs a pipeline. The result is returned even when the oracle rejects it,
 * together with DC_ERR_ORACLE. */
DC_API dc_status dc_cut(const dc_scene* scene, const dc_cut_params* params, dc_fragments** out);
DC_API dc_status dc_fragments_load(const char* path, dc_fragments** out);
DC_API dc_status dc_fragments_save(const dc_fragments* fragments, const char* path, int triangulate);
DC_API dc_status dc_fragments_export_obj(const dc_fragments* fragments, const char* path);
DC_API dc_status dc_fragments_count(const dc_fragments* fragments, size_t* polygons, size_t* segments);
DC_API dc_status dc_fragments_stats_json(const dc_fragments* fragments, char** out);
DC_API void dc_fragments_free(dc_fragments* fragments);

/* Orders and checks ----------------------------------------------------------- */

/* JSON {"acyclic": true, "order": [...]} or {"acyclic": false, "cycle": [...],
 * "witnesses": [...]}; *acyclic receives the verdict. */
DC_API dc_status dc_scene_order(const dc_scene* scene, int* acyclic, char** out);
DC_API dc_status dc_fragments_order(const dc_fragments* fragments, int* acyclic, char** out);
/* Re-verifies an order against the exact relation: DC_OK or DC_ERR_ORACLE. */
DC_API dc_status dc_fragments_verify(const dc_fragments* fragments, char** report);

/* Rendering --------------------------------------------------------------- */

/* Writes a PPM for painter or zbuffer mode; diff mode renders both and writes
 * nothing unless path is non-null (then the z-buffer image). Diff counts
 * unmasked differing pixels. */
DC_API dc_status dc_render(const dc_fragments* fragments, int width, int height, dc_render_mode mode, const char* path,
                           long* differing, long* masked);

/* Benchmark ----------------------------------------------------------------- */

/* config JSON: {"families": [...], "sizes": [...], "strategies": [...],
 * "seeds": [...], "algorithm": "", "rho": 4}. Writes the CSV and fit CSV.
 * DC_ERR_ORACLE (and no files) if any instance fails the oracle. */
DC_API dc_status dc_bench(const char* config_json, const char* csv_path, const char* fit_path, char** summary);

#ifdef __cplusplus
}
#endif

#endif /* DEPTHCUT_DEPTHCUT_H_ */

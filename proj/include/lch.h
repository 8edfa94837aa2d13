/* Copyright (c) 2026 the lch authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the lch engine.  A session is a small script of ring,
 * ideal, module and graded-family declarations followed by compute/check
 * commands; running one produces a deterministic report (JSON or text).
 *
 * Status classes, shared with the command line tool:
 *   0  success
 *   2  input error (parse error, unknown name, malformed data)
 *   3  mathematical domain error (and timeouts)
 *   4  unsupported coefficient field
 */
#ifndef LCH_H
#define LCH_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lch_engine lch_engine;

/* Library version; static storage, do not free. */
const char* lch_version(void);

/* Engines are cheap; one per session run is fine.  Never returns NULL
 * except on allocation failure. */
lch_engine* lch_engine_new(void);
void lch_engine_free(lch_engine* e);

/* Seed for every randomized choice the engine makes.  Default 42. */
void lch_engine_set_seed(lch_engine* e, uint64_t seed);

/* Set a named option.  Keys and value shapes:
 *   "format"        "json" | "text"            (default "json")
 *   "range"         "L..H", integers L <= H    (default "0..12")
 *   "window"        integer >= 2               (default "3")
 *   "t-range"       "L..H", integers           (default "1..3")
 *   "timeout-secs"  integer >= 0, 0 = off      (default "0")
 * These fill in whatever a command does not specify itself; a range or
 * window clause on a command always wins.  Returns 0 on success and 2 on
 * an unknown key or a malformed value. */
int lch_engine_set_option(lch_engine* e, const char* key, const char* value);

/* Run a session.  On return *out (if out is non-NULL) holds the rendered
 * report in the configured format; release it with lch_free.  A report is
 * produced even when the run fails: it carries the results preceding the
 * failure plus an error object with a located message.  The return value
 * is the status class above. */
int lch_engine_run(lch_engine* e, const char* text, char** out);

/* Message of the error from the most recent run, or "" if it succeeded.
 * Owned by the engine; valid until the next run or free. */
const char* lch_engine_last_error(const lch_engine* e);

void lch_free(char* p);

#ifdef __cplusplus
}
#endif

#endif /* LCH_H */

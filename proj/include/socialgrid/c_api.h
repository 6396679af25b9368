/* Plain C boundary for driving focal seats from other languages.
 *
 * Every call returns an sg_status. On failure a message is available from
 * sg_last_error() on the same thread until the next failing call. No C++
 * exception crosses this boundary. A session belongs to one thread at a time;
 * distinct sessions may be used concurrently. */
#ifndef SOCIALGRID_C_API_H_
#define SOCIALGRID_C_API_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define SG_ABI_VERSION 1

#if defined(SOCIALGRID_C_API_BUILD) && defined(__GNUC__)
#define SG_API __attribute__((visibility("default")))
#else
#define SG_API
#endif

typedef enum {
  SG_OK = 0,
  SG_ERR_INVALID_ARGUMENT = 1,
  SG_ERR_NOT_FOUND = 2,
  SG_ERR_CLOSED = 3,
  SG_ERR_EPISODE_DONE = 4,
  SG_ERR_CONFIG = 5,
  SG_ERR_BUFFER_TOO_SMALL = 6,
  SG_ERR_INTERNAL = 7
} sg_status;

typedef enum { SG_SUBSTRATES = 0, SG_SCENARIOS = 1 } sg_list;

typedef struct sg_registry sg_registry;
typedef struct sg_session sg_session;

typedef struct {
  int32_t num_players;
  int32_t focal_count;
  int32_t episode_length;
  int32_t num_actions;
  int32_t obs_height;
  int32_t obs_width;
  int32_t obs_channels;
} sg_scenario_info;

typedef struct {
  int32_t focal_count;
  int32_t num_actions;
  int32_t step;
  int32_t episode_length;
  int32_t done;
  int32_t obs_height;
  int32_t obs_width;
  int32_t obs_channels;
} sg_session_info;

SG_API int sg_abi_version(void);
SG_API const char* sg_last_error(void);

/* data_dir may be NULL for the default location ($SOCIALGRID_DATA or the
 * build-time data directory). */
SG_API sg_status sg_registry_open(const char* data_dir, sg_registry** out);
SG_API void sg_registry_free(sg_registry* registry);
SG_API sg_status sg_registry_count(const sg_registry* registry, sg_list list, int32_t* out);
/* Writes the NUL-terminated id into buf; *len receives strlen(id) even when
 * the buffer is too small. */
SG_API sg_status sg_registry_name(const sg_registry* registry, sg_list list, int32_t index, char* buf, size_t capacity,
                           size_t* len);
SG_API sg_status sg_scenario_info_get(const sg_registry* registry, const char* scenario, sg_scenario_info* out);

/* The session keeps the registry alive on its own. */
SG_API sg_status sg_session_create(const sg_registry* registry, const char* scenario, uint64_t seed, sg_session** out);
SG_API sg_status sg_session_reset(sg_session* session, uint64_t seed);
SG_API sg_status sg_session_info_get(const sg_session* session, sg_session_info* out);
/* RGB24, row-major, obs_height * obs_width * 3 bytes. */
SG_API sg_status sg_session_observe(const sg_session* session, int32_t seat, uint8_t* buf, size_t capacity);
/* actions and rewards hold focal_count entries; rewards and done may be NULL.
 * A rejected call leaves the episode untouched. */
SG_API sg_status sg_session_step(sg_session* session, const int32_t* actions, int32_t count, double* rewards, int32_t* done);
/* Events of the most recent step as a JSON array. */
SG_API sg_status sg_session_events_json(const sg_session* session, char* buf, size_t capacity, size_t* len);
SG_API sg_status sg_session_returns(const sg_session* session, double* out, int32_t count);
SG_API sg_status sg_session_digests(const sg_session* session, uint64_t* event_digest, uint64_t* state_digest);
/* Releases the episode; later calls on the handle fail with SG_ERR_CLOSED. */
SG_API sg_status sg_session_close(sg_session* session);
/* Frees the handle, closing it first if needed. */
SG_API void sg_session_free(sg_session* session);

#ifdef __cplusplus
}
#endif

#endif /* SOCIALGRID_C_API_H_ */

"""Reference agents for driving focal seats."""

import random


class NoopAgent:
    def reset(self, seed):
        pass

    def act(self, observation, reward):
        return 0


class RandomAgent:
    def __init__(self, num_actions):
        self.num_actions = num_actions
        self._rng = random.Random(0)

    def reset(self, seed):
        self._rng = random.Random(seed)

    def act(self, observation, reward):
        return self._rng.randrange(self.num_actions)


def run_agents(session, agents, seed):
    """Plays one episode with one agent per focal seat; returns the focal returns."""
    if len(agents) != session.focal_count:
        raise ValueError(f"need {session.focal_count} agents, got {len(agents)}")
    observations = session.reset(seed)
    rewards = [0.0] * len(agents)
    for i, agent in enumerate(agents):
        agent.reset(seed * 1000 + i)
    done = False
    while not done:
        actions = [a.act(o, r) for a, o, r in zip(agents, observations, rewards)]
        observations, rewards, done, _ = session.step(actions)
    return session.returns()

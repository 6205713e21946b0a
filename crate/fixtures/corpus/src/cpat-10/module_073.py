
def step_114(cfg):
    v0_s114 = []
    for v1_s114 in range(len(v2_s114)):
        if v3_s114(v2_s114[v1_s114]):
            v0_s114 = v0_s114 + [v2_s114[v1_s114]]
    return cfg

def step_345(cfg):
    v0_s345 = []
    for v1_s345 in range(len(v2_s345)):
        if v3_s345(v2_s345[v1_s345]):
            v0_s345 = v0_s345 + [v2_s345[v1_s345]]
    return cfg

def step_576(cfg):
    v0_s576 = []
    for v1_s576 in range(len(v2_s576)):
        if v3_s576(v2_s576[v1_s576]):
            v0_s576 = v0_s576 + [v2_s576[v1_s576]]
    return cfg

def step_807(cfg):
    v0_s807 = []
    for v1_s807 in range(len(v2_s807)):
        if v3_s807(v2_s807[v1_s807]):
            v0_s807 = v0_s807 + [v2_s807[v1_s807]]
    return cfg

def step_127(cfg):
    v0_s127 = []
    for v1_s127 in range(len(v2_s127)):
        v3_s127 = v2_s127[v1_s127]
        if v4_s127(v3_s127):
            v0_s127.append(v3_s127)
    return cfg

def step_358(cfg):
    v0_s358 = []
    for v1_s358 in range(len(v2_s358)):
        v3_s358 = v2_s358[v1_s358]
        if v4_s358(v3_s358):
            v0_s358.append(v3_s358)
    return cfg

def step_589(cfg):
    v0_s589 = []
    for v1_s589 in range(len(v2_s589)):
        v3_s589 = v2_s589[v1_s589]
        if v4_s589(v3_s589):
            v0_s589.append(v3_s589)
    return cfg

def step_820(cfg):
    v0_s820 = []
    for v1_s820 in range(len(v2_s820)):
        v3_s820 = v2_s820[v1_s820]
        if v4_s820(v3_s820):
            v0_s820.append(v3_s820)
    return cfg

def step_140(cfg):
    v0_s140 = []
    for v1_s140 in range(len(v2_s140)):
        if v3_s140(v2_s140[v1_s140]):
            v0_s140 += [v2_s140[v1_s140]]
    return cfg

def step_371(cfg):
    v0_s371 = []
    for v1_s371 in range(len(v2_s371)):
        if v3_s371(v2_s371[v1_s371]):
            v0_s371 += [v2_s371[v1_s371]]
    return cfg

def step_602(cfg):
    v0_s602 = []
    for v1_s602 in range(len(v2_s602)):
        if v3_s602(v2_s602[v1_s602]):
            v0_s602 += [v2_s602[v1_s602]]
    return cfg

def step_833(cfg):
    v0_s833 = []
    for v1_s833 in range(len(v2_s833)):
        if v3_s833(v2_s833[v1_s833]):
            v0_s833 += [v2_s833[v1_s833]]
    return cfg

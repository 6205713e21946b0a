
def step_323(cfg):
    v0_s323 = []
    for v1_s323 in range(len(v2_s323)):
        if v3_s323(v2_s323[v1_s323]):
            v0_s323 += [v2_s323[v1_s323]]
    return cfg

def step_554(cfg):
    v0_s554 = []
    for v1_s554 in range(len(v2_s554)):
        if v3_s554(v2_s554[v1_s554]):
            v0_s554 += [v2_s554[v1_s554]]
    return cfg

def step_785(cfg):
    v0_s785 = []
    for v1_s785 in range(len(v2_s785)):
        if v3_s785(v2_s785[v1_s785]):
            v0_s785 += [v2_s785[v1_s785]]
    return cfg

def step_105(cfg):
    v0_s105 = []
    for v1_s105 in range(len(v2_s105)):
        if v3_s105(v2_s105[v1_s105]):
            v0_s105 = v0_s105 + [v2_s105[v1_s105]]
    return cfg

def step_336(cfg):
    v0_s336 = []
    for v1_s336 in range(len(v2_s336)):
        if v3_s336(v2_s336[v1_s336]):
            v0_s336 = v0_s336 + [v2_s336[v1_s336]]
    return cfg

def step_567(cfg):
    v0_s567 = []
    for v1_s567 in range(len(v2_s567)):
        if v3_s567(v2_s567[v1_s567]):
            v0_s567 = v0_s567 + [v2_s567[v1_s567]]
    return cfg

def step_798(cfg):
    v0_s798 = []
    for v1_s798 in range(len(v2_s798)):
        if v3_s798(v2_s798[v1_s798]):
            v0_s798 = v0_s798 + [v2_s798[v1_s798]]
    return cfg

def step_118(cfg):
    v0_s118 = []
    for v1_s118 in range(len(v2_s118)):
        v3_s118 = v2_s118[v1_s118]
        if v4_s118(v3_s118):
            v0_s118.append(v3_s118)
    return cfg

def step_349(cfg):
    v0_s349 = []
    for v1_s349 in range(len(v2_s349)):
        v3_s349 = v2_s349[v1_s349]
        if v4_s349(v3_s349):
            v0_s349.append(v3_s349)
    return cfg

def step_580(cfg):
    v0_s580 = []
    for v1_s580 in range(len(v2_s580)):
        v3_s580 = v2_s580[v1_s580]
        if v4_s580(v3_s580):
            v0_s580.append(v3_s580)
    return cfg

def step_811(cfg):
    v0_s811 = []
    for v1_s811 in range(len(v2_s811)):
        v3_s811 = v2_s811[v1_s811]
        if v4_s811(v3_s811):
            v0_s811.append(v3_s811)
    return cfg

def step_131(cfg):
    v0_s131 = []
    for v1_s131 in range(len(v2_s131)):
        if v3_s131(v2_s131[v1_s131]):
            v0_s131 += [v2_s131[v1_s131]]
    return cfg


def step_493(cfg):
    v0_s493 = []
    for v1_s493 in range(len(v2_s493)):
        v3_s493 = v2_s493[v1_s493]
        if v4_s493(v3_s493):
            v0_s493.append(v3_s493)
    return cfg

def step_724(cfg):
    v0_s724 = []
    for v1_s724 in range(len(v2_s724)):
        v3_s724 = v2_s724[v1_s724]
        if v4_s724(v3_s724):
            v0_s724.append(v3_s724)
    return cfg

def step_44(cfg):
    v0_s44 = []
    for v1_s44 in range(len(v2_s44)):
        if v3_s44(v2_s44[v1_s44]):
            v0_s44 += [v2_s44[v1_s44]]
    return cfg

def step_275(cfg):
    v0_s275 = []
    for v1_s275 in range(len(v2_s275)):
        if v3_s275(v2_s275[v1_s275]):
            v0_s275 += [v2_s275[v1_s275]]
    return cfg

def step_506(cfg):
    v0_s506 = []
    for v1_s506 in range(len(v2_s506)):
        if v3_s506(v2_s506[v1_s506]):
            v0_s506 += [v2_s506[v1_s506]]
    return cfg

def step_737(cfg):
    v0_s737 = []
    for v1_s737 in range(len(v2_s737)):
        if v3_s737(v2_s737[v1_s737]):
            v0_s737 += [v2_s737[v1_s737]]
    return cfg

def step_57(cfg):
    v0_s57 = []
    for v1_s57 in range(len(v2_s57)):
        if v3_s57(v2_s57[v1_s57]):
            v0_s57 = v0_s57 + [v2_s57[v1_s57]]
    return cfg

def step_288(cfg):
    v0_s288 = []
    for v1_s288 in range(len(v2_s288)):
        if v3_s288(v2_s288[v1_s288]):
            v0_s288 = v0_s288 + [v2_s288[v1_s288]]
    return cfg

def step_519(cfg):
    v0_s519 = []
    for v1_s519 in range(len(v2_s519)):
        if v3_s519(v2_s519[v1_s519]):
            v0_s519 = v0_s519 + [v2_s519[v1_s519]]
    return cfg

def step_750(cfg):
    v0_s750 = []
    for v1_s750 in range(len(v2_s750)):
        if v3_s750(v2_s750[v1_s750]):
            v0_s750 = v0_s750 + [v2_s750[v1_s750]]
    return cfg

def step_70(cfg):
    v0_s70 = []
    for v1_s70 in range(len(v2_s70)):
        v3_s70 = v2_s70[v1_s70]
        if v4_s70(v3_s70):
            v0_s70.append(v3_s70)
    return cfg

def step_301(cfg):
    v0_s301 = []
    for v1_s301 in range(len(v2_s301)):
        v3_s301 = v2_s301[v1_s301]
        if v4_s301(v3_s301):
            v0_s301.append(v3_s301)
    return cfg

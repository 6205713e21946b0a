
def step_727(cfg):
    v0_s727 = []
    for v1_s727 in range(len(v2_s727)):
        v3_s727 = v2_s727[v1_s727]
        if v4_s727(v3_s727):
            v0_s727.append(v3_s727)
    return cfg

def step_47(cfg):
    v0_s47 = []
    for v1_s47 in range(len(v2_s47)):
        if v3_s47(v2_s47[v1_s47]):
            v0_s47 += [v2_s47[v1_s47]]
    return cfg

def step_278(cfg):
    v0_s278 = []
    for v1_s278 in range(len(v2_s278)):
        if v3_s278(v2_s278[v1_s278]):
            v0_s278 += [v2_s278[v1_s278]]
    return cfg

def step_509(cfg):
    v0_s509 = []
    for v1_s509 in range(len(v2_s509)):
        if v3_s509(v2_s509[v1_s509]):
            v0_s509 += [v2_s509[v1_s509]]
    return cfg

def step_740(cfg):
    v0_s740 = []
    for v1_s740 in range(len(v2_s740)):
        if v3_s740(v2_s740[v1_s740]):
            v0_s740 += [v2_s740[v1_s740]]
    return cfg

def step_60(cfg):
    v0_s60 = []
    for v1_s60 in range(len(v2_s60)):
        if v3_s60(v2_s60[v1_s60]):
            v0_s60 = v0_s60 + [v2_s60[v1_s60]]
    return cfg

def step_291(cfg):
    v0_s291 = []
    for v1_s291 in range(len(v2_s291)):
        if v3_s291(v2_s291[v1_s291]):
            v0_s291 = v0_s291 + [v2_s291[v1_s291]]
    return cfg

def step_522(cfg):
    v0_s522 = []
    for v1_s522 in range(len(v2_s522)):
        if v3_s522(v2_s522[v1_s522]):
            v0_s522 = v0_s522 + [v2_s522[v1_s522]]
    return cfg

def step_753(cfg):
    v0_s753 = []
    for v1_s753 in range(len(v2_s753)):
        if v3_s753(v2_s753[v1_s753]):
            v0_s753 = v0_s753 + [v2_s753[v1_s753]]
    return cfg

def step_73(cfg):
    v0_s73 = []
    for v1_s73 in range(len(v2_s73)):
        v3_s73 = v2_s73[v1_s73]
        if v4_s73(v3_s73):
            v0_s73.append(v3_s73)
    return cfg

def step_304(cfg):
    v0_s304 = []
    for v1_s304 in range(len(v2_s304)):
        v3_s304 = v2_s304[v1_s304]
        if v4_s304(v3_s304):
            v0_s304.append(v3_s304)
    return cfg

def step_535(cfg):
    v0_s535 = []
    for v1_s535 in range(len(v2_s535)):
        v3_s535 = v2_s535[v1_s535]
        if v4_s535(v3_s535):
            v0_s535.append(v3_s535)
    return cfg
